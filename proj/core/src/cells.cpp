// Copyright 2026 The kakcell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kakcell/cells.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kakcell/kak.hpp"

namespace kakcell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kQuarterPi = kPi / 4;

// Snap coordinates sitting within snap_eps of a boundary value, and equalize
// near-equal magnitudes; the canonicalizer branches on signs of tiny
// differences otherwise.
CanonCoords snapped(const CanonCoords& c) {
  CanonCoords out = c;
  for (int i = 0; i < 3; ++i) {
    for (const double v : {0.0, kQuarterPi, kHalfPi, -kQuarterPi, -kHalfPi}) {
      if (std::abs(out[i] - v) <= snap_eps) {
        out[i] = v;
        break;
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(out[i] - out[j]) <= snap_eps)
        out[j] = out[i];
      else if (std::abs(out[i] + out[j]) <= snap_eps)
        out[j] = -out[i];
    }
  }
  return out;
}

// Tracks coords together with the exact affine move applied so far:
// c == apply(w, c0) + (pi/2) * n.
struct Tracker {
  CanonCoords c;
  WeylElement w;
  std::array<long, 3> n{0, 0, 0};

  explicit Tracker(const CanonCoords& c0) : c(c0) {}

  void translate(const std::array<long, 3>& dn) {
    for (int i = 0; i < 3; ++i) {
      c[i] += dn[i] * kHalfPi;
      n[i] += dn[i];
    }
  }

  void weyl(const WeylElement& g) {
    c = kakcell::apply(g, c);
    n = kakcell::apply(g, n);
    w = compose(g, w);
  }

  // Stable descending sort of the coordinates, as a pure permutation.
  void sort_descending() {
    std::array<std::uint8_t, 3> order{0, 1, 2};
    std::stable_sort(
        order.begin(), order.end(),
        [&](std::uint8_t a, std::uint8_t b) { return c[a] > c[b]; });
    WeylElement g;
    g.perm = order;
    weyl(g);
  }
};

// Translation of a single coordinate by `amount` half-periods.
void shift(Tracker& tr, int idx, long amount) {
  std::array<long, 3> dn{0, 0, 0};
  dn[idx] = amount;
  tr.translate(dn);
}

// Wrap coordinate idx into [lo, lo + pi) by whole-period (two half-period)
// shifts.
void wrap_period(Tracker& tr, int idx, double lo) {
  const double m = std::floor((tr.c[idx] - lo) / kPi);
  if (m != 0.0) shift(tr, idx, -2 * static_cast<long>(m));
  // top-edge fuzz wraps to the bottom
  if (tr.c[idx] >= lo + kPi - snap_eps) shift(tr, idx, -2);
  if (std::abs(tr.c[idx] - lo) <= snap_eps) tr.c[idx] = lo;
}

// Wrap coordinate idx into [0, pi/2) by half-period shifts (p-lattice only).
void wrap_half_period(Tracker& tr, int idx) {
  const double m = std::floor(tr.c[idx] / kHalfPi);
  if (m != 0.0) shift(tr, idx, -static_cast<long>(m));
  if (tr.c[idx] >= kHalfPi - snap_eps) shift(tr, idx, -1);
  if (std::abs(tr.c[idx]) <= snap_eps) tr.c[idx] = 0.0;
}

// K-lattice range reduction: c1, c2 in [0, pi/2), c3 in [-pi/2, pi/2).
// Lone half-period shifts are not in the K-lattice, so they pair with a
// compensating shift of c3.
void reduce_ranges_T(Tracker& tr) {
  wrap_period(tr, 0, 0.0);
  wrap_period(tr, 1, 0.0);
  wrap_period(tr, 2, -kHalfPi);
  const bool b1 = tr.c[0] >= kHalfPi - snap_eps;
  const bool b2 = tr.c[1] >= kHalfPi - snap_eps;
  if (b1 && b2) {
    tr.translate({-1, -1, 0});
  } else if (b1) {
    tr.translate({-1, 0, -1});
    wrap_period(tr, 2, -kHalfPi);
  } else if (b2) {
    tr.translate({0, -1, -1});
    wrap_period(tr, 2, -kHalfPi);
  }
  for (int i = 0; i < 2; ++i)
    if (std::abs(tr.c[i]) <= snap_eps) tr.c[i] = 0.0;
}

const WeylElement& reflect_sum() {  // (c1,c2,c3) -> (-c2,-c1,c3), then +pi/2
  static const WeylElement w{{1, 0, 2}, {-1, -1, 1}};
  return w;
}

const WeylElement& flip_23() {  // (c1,c2,c3) -> (c1,-c3,-c2)
  static const WeylElement w{{0, 2, 1}, {1, -1, -1}};
  return w;
}

const WeylElement& seam_reflect() {  // (c1,c2,c3) -> (-c1,c2,-c3), then +pi/2
  static const WeylElement w{{0, 1, 2}, {-1, 1, -1}};
  return w;
}

bool closure_T(const CanonCoords& c, double eps) {
  return c.c1 <= kHalfPi + eps && c.c1 >= c.c2 - eps &&
         c.c2 >= std::abs(c.c3) - eps && c.c2 >= -eps &&
         c.c1 + c.c2 <= kHalfPi + eps;
}

bool closure_P(const CanonCoords& c, double eps) {
  if (!(c.c1 <= kHalfPi + eps && c.c1 >= c.c2 - eps && c.c2 >= c.c3 - eps &&
        c.c3 >= -snap_eps && c.c1 + c.c2 <= kHalfPi + eps))
    return false;
  if (std::abs(c.c3) <= snap_eps && c.c1 > kQuarterPi + eps) return false;
  return true;
}

bool in_closure(const CanonCoords& c, CellKind cell, double eps) {
  return cell == CellKind::T ? closure_T(c, eps) : closure_P(c, eps);
}

// Lexicographic comparison with an equality band; snapped inputs expected.
bool lex_greater(const CanonCoords& a, const CanonCoords& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] > b[i] + 1e-10) return true;
    if (a[i] < b[i] - 1e-10) return false;
  }
  return false;
}

// Reduction loop: range-fit by lattice translations, sort, then the two
// affine reflections. Lands in the cell for almost every orbit; the orbit
// of [pi/2,0,0] oscillates (it has no representative with c1 < pi/2), which
// the candidate pass resolves.
void reduce_loop_T(Tracker& tr) {
  for (int iter = 0; iter < 16; ++iter) {
    reduce_ranges_T(tr);
    tr.sort_descending();
    if (tr.c[0] + tr.c[1] > kHalfPi + snap_eps) {
      tr.weyl(reflect_sum());
      tr.translate({1, 1, 0});
      continue;
    }
    if (tr.c[1] + tr.c[2] < -snap_eps) {
      tr.weyl(flip_23());
      continue;
    }
    break;
  }
}

void reduce_loop_P(Tracker& tr) {
  for (int i = 0; i < 3; ++i) wrap_half_period(tr, i);
  tr.sort_descending();
  if (tr.c[0] + tr.c[1] > kHalfPi + snap_eps) {
    tr.weyl(reflect_sum());
    tr.translate({1, 1, 0});
    tr.sort_descending();
  }
  if (std::abs(tr.c[2]) <= snap_eps && tr.c[0] > kQuarterPi + snap_eps) {
    tr.weyl(seam_reflect());
    tr.translate({1, 0, 0});
  }
}

bool lattice_parity_ok(CellKind cell, const std::array<long, 3>& n) {
  if (cell == CellKind::P) return true;
  const int odd = static_cast<int>(n[0] & 1L) + static_cast<int>(n[1] & 1L) +
                  static_cast<int>(n[2] & 1L);
  return odd == 0 || odd == 2;
}

// Each orbit meets the closed cell in exactly one point; this pass locates it
// from the loop result and fixes boundary fuzz deterministically by keeping
// the lexicographically largest snapped candidate (preferring the current
// point on ties).
void closure_candidate_pass(Tracker& tr, CellKind cell) {
  const double eps = 1e-9;
  CanonCoords best = snapped(tr.c);
  WeylElement best_w;                 // relative to the loop result
  std::array<long, 3> best_n{0, 0, 0};
  bool have = in_closure(best, cell, eps);

  for (const WeylElement& w : weyl_group()) {
    const CanonCoords d0 = apply(w, tr.c);
    std::array<long, 3> n{};
    for (n[0] = -2; n[0] <= 2; ++n[0]) {
      for (n[1] = -2; n[1] <= 2; ++n[1]) {
        for (n[2] = -2; n[2] <= 2; ++n[2]) {
          if (!lattice_parity_ok(cell, n)) continue;
          const CanonCoords d = snapped(
              {d0.c1 + n[0] * kHalfPi, d0.c2 + n[1] * kHalfPi,
               d0.c3 + n[2] * kHalfPi});
          if (!in_closure(d, cell, eps)) continue;
          if (!have || lex_greater(d, best)) {
            best = d;
            best_w = w;
            best_n = n;
            have = true;
          }
        }
      }
    }
  }
  if (!have)
    throw std::logic_error("canonicalize: no closure representative found");
  tr.weyl(best_w);
  tr.translate(best_n);
  tr.c = best;
}

Tracker canonicalize_tracked(const CanonCoords& c, CellKind cell) {
  // Beyond ~1e6 radians the floating reduction error would exceed the
  // boundary snap band.
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(c[i]) || std::abs(c[i]) > 1e6)
      throw std::invalid_argument(
          "canonicalize: coordinates must be finite and below 1e6 radians");
  }
  Tracker tr(c);
  if (cell == CellKind::T) {
    reduce_loop_T(tr);
  } else {
    reduce_loop_P(tr);
  }
  closure_candidate_pass(tr, cell);
  return tr;
}

}  // namespace

CellPoint canonicalize_with_move(const CanonCoords& c, CellKind cell,
                                 CellMove& move) {
  Tracker tr = canonicalize_tracked(c, cell);
  move.w = tr.w;
  move.half_periods = tr.n;
  return {tr.c, cell};
}

CellPoint canonicalize(const CanonCoords& c, CellKind cell) {
  CellMove move;
  return canonicalize_with_move(c, cell, move);
}

CellPoint canonicalize_T(const CanonCoords& c) {
  return canonicalize(c, CellKind::T);
}

CellPoint canonicalize_P(const CanonCoords& c) {
  return canonicalize(c, CellKind::P);
}

bool in_cell(const CanonCoords& c, CellKind cell, double tol) {
  if (cell == CellKind::T) {
    return c.c1 < kHalfPi - tol && c.c1 >= c.c2 - tol &&
           c.c2 >= std::abs(c.c3) - tol && c.c2 >= -tol &&
           c.c1 + c.c2 <= kHalfPi + tol;
  }
  if (!(c.c1 < kHalfPi - tol && c.c1 >= c.c2 - tol && c.c2 >= c.c3 - tol &&
        c.c3 >= -tol && c.c1 + c.c2 <= kHalfPi + tol))
    return false;
  if (std::abs(c.c3) <= snap_eps && c.c1 > kQuarterPi + tol) return false;
  return true;
}

bool in_cell_closure(const CanonCoords& c, CellKind cell, double tol) {
  const CanonCoords s = snapped(c);
  if (cell == CellKind::T) return closure_T(s, tol);
  // topological closure of the region: the seam clause removes a measure-zero
  // half-face and does not survive the closure
  return s.c1 <= kHalfPi + tol && s.c1 >= s.c2 - tol && s.c2 >= s.c3 - tol &&
         s.c3 >= -tol && s.c1 + s.c2 <= kHalfPi + tol;
}

CanonCoords phase_partner_T(const CanonCoords& c, double tol) {
  if (!in_cell_closure(c, CellKind::T, tol))
    throw OutOfCell("phase_partner_T: coordinates outside the T-cell");
  return canonicalize_T({kHalfPi - c.c1, c.c2, -c.c3}).coords;
}

bool locally_equivalent(const Matrix4& u, const Matrix4& v, double tol) {
  const auto du = kak_decompose(u, CellKind::T, tol);
  const auto dv = kak_decompose(v, CellKind::T, tol);
  return max_abs_diff(du.coords, dv.coords) <= tol;
}

bool projective_locally_equivalent(const Matrix4& u, const Matrix4& v,
                                   double tol) {
  const auto du = kak_decompose(u, CellKind::P, tol);
  const auto dv = kak_decompose(v, CellKind::P, tol);
  return max_abs_diff(du.coords, dv.coords) <= tol;
}

CellGeometry cell_geometry(CellKind cell) {
  CellGeometry g;
  g.cell = cell;
  const CanonCoords O{0, 0, 0};
  const CanonCoords A{kQuarterPi, kQuarterPi, kQuarterPi};
  const CanonCoords B{kHalfPi, 0, 0};
  if (cell == CellKind::T) {
    const CanonCoords U{kQuarterPi, kQuarterPi, -kQuarterPi};
    g.vertices = {{"O", O}, {"A", A}, {"B", B}, {"U", U}};
    g.edges = {{"O", "A"}, {"O", "B"}, {"O", "U"},
               {"A", "B"}, {"A", "U"}, {"B", "U"}};
  } else {
    const CanonCoords C{kQuarterPi, kQuarterPi, 0};
    const CanonCoords S{kQuarterPi, 0, 0};
    g.vertices = {{"O", O}, {"A", A}, {"B", B}, {"C", C}, {"S", S}};
    g.edges = {{"O", "A"}, {"O", "B"}, {"O", "C"},
               {"A", "B"}, {"A", "C"}, {"B", "C"}};
    g.seam = CellSeam{
        "S",
        S,
        {"S", "C"},
        "base triangles OCS and BCS are identified by the reflection "
        "across segment SC"};
  }
  return g;
}

}  // namespace kakcell
