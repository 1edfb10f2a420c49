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

#include "kakcell/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <stdexcept>

#include "kakcell/su4.hpp"

namespace kakcell {

CanonCoords apply(const WeylElement& w, const CanonCoords& c) {
  CanonCoords out;
  for (int i = 0; i < 3; ++i) out[i] = w.sign[i] * c[w.perm[i]];
  return out;
}

std::array<long, 3> apply(const WeylElement& w, const std::array<long, 3>& n) {
  std::array<long, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = w.sign[i] * n[w.perm[i]];
  return out;
}

WeylElement compose(const WeylElement& g, const WeylElement& h) {
  WeylElement out;
  for (int i = 0; i < 3; ++i) {
    out.perm[i] = h.perm[g.perm[i]];
    out.sign[i] = static_cast<std::int8_t>(g.sign[i] * h.sign[g.perm[i]]);
  }
  return out;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out;
  for (int i = 0; i < 3; ++i) {
    out.perm[w.perm[i]] = static_cast<std::uint8_t>(i);
  }
  for (int i = 0; i < 3; ++i) out.sign[i] = w.sign[out.perm[i]];
  return out;
}

const std::array<WeylElement, 6>& reflections() {
  static const std::array<WeylElement, 6> refl = {{
      {{0, 2, 1}, {1, 1, 1}},     // (c1, c3, c2)
      {{0, 2, 1}, {1, -1, -1}},   // (c1, -c3, -c2)
      {{1, 0, 2}, {1, 1, 1}},     // (c2, c1, c3)
      {{1, 0, 2}, {-1, -1, 1}},   // (-c2, -c1, c3)
      {{2, 1, 0}, {1, 1, 1}},     // (c3, c2, c1)
      {{2, 1, 0}, {-1, 1, -1}},   // (-c3, c2, -c1)
  }};
  return refl;
}

namespace {

// Group elements with their conjugation realizations, generated together so
// every k_w is a fixed product of generator realizations.
const std::map<WeylElement, Matrix4>& realization_table() {
  static const std::map<WeylElement, Matrix4> table = [] {
    const Complex i{0.0, 1.0};
    const double s = 1.0 / std::numbers::sqrt2;
    const Matrix2 id2 = Matrix2::Identity();

    // Rotation by pi about the bisector of two axes swaps those Pauli axes;
    // applied on both qubits the residual signs square away, so conjugation
    // permutes the interaction coordinates.
    const Matrix2 g_yz = -i * s * (pauli(PauliAxis::Y) + pauli(PauliAxis::Z));
    const Matrix2 g_xy = -i * s * (pauli(PauliAxis::X) + pauli(PauliAxis::Y));
    const Matrix2 g_xz = -i * s * (pauli(PauliAxis::X) + pauli(PauliAxis::Z));

    // A single-qubit Pauli flips the sign of the two other coordinates.
    const Matrix4 f_x = kron(i * pauli(PauliAxis::X), id2);
    const Matrix4 f_y = kron(i * pauli(PauliAxis::Y), id2);
    const Matrix4 f_z = kron(i * pauli(PauliAxis::Z), id2);

    const auto& refl = reflections();
    std::array<Matrix4, 6> refl_k;
    refl_k[0] = kron(g_yz, g_yz);
    refl_k[1] = f_x * refl_k[0];
    refl_k[2] = kron(g_xy, g_xy);
    refl_k[3] = f_z * refl_k[2];
    refl_k[4] = kron(g_xz, g_xz);
    refl_k[5] = f_y * refl_k[4];

    std::map<WeylElement, Matrix4> out;
    out.emplace(WeylElement{}, Matrix4::Identity());
    std::deque<WeylElement> frontier{WeylElement{}};
    while (!frontier.empty()) {
      const WeylElement w = frontier.front();
      frontier.pop_front();
      const Matrix4 kw = out.at(w);
      for (std::size_t r = 0; r < refl.size(); ++r) {
        const WeylElement next = compose(refl[r], w);
        if (out.emplace(next, refl_k[r] * kw).second) {
          frontier.push_back(next);
        }
      }
    }
    if (out.size() != 24)
      throw std::logic_error("Weyl group closure has unexpected size");
    return out;
  }();
  return table;
}

}  // namespace

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> out;
    out.reserve(24);
    for (const auto& [w, k] : realization_table()) out.push_back(w);
    return out;
  }();
  return group;
}

const Matrix4& local_realization(const WeylElement& w) {
  const auto& table = realization_table();
  const auto it = table.find(w);
  if (it == table.end())
    throw std::invalid_argument("local_realization: not a Weyl element");
  return it->second;
}

const std::array<Root, 12>& root_system() {
  static const std::array<Root, 12> roots = {{
      {1, 2, 1, 1},   {1, 2, 1, -1},  {1, 2, -1, 1},  {1, 2, -1, -1},
      {0, 2, 1, 1},   {0, 2, 1, -1},  {0, 2, -1, 1},  {0, 2, -1, -1},
      {0, 1, 1, 1},   {0, 1, 1, -1},  {0, 1, -1, 1},  {0, 1, -1, -1},
  }};
  return roots;
}

RootSystemReport verify_root_system() {
  const auto& basis = su4_basis();
  const Complex i{0.0, 1.0};
  // X_j in the 1-based numbering of the basis listing.
  const auto x = [&](int j) -> const Matrix4& { return basis[j - 1].matrix; };

  // Root vectors paired with their (a, b, c) eigenvalue triples for
  // ad X7, ad X11, ad X15. Same order as root_system().
  struct Entry {
    Matrix4 e;
    std::array<Complex, 3> eig;
  };
  const Complex two_i{0.0, 2.0};
  const std::array<Entry, 12> entries = {{
      {x(1) - i * x(14) - x(4) + i * x(12), {0.0, two_i, two_i}},
      {x(1) - i * x(14) + x(4) - i * x(12), {0.0, two_i, -two_i}},
      {x(1) + i * x(14) + x(4) + i * x(12), {0.0, -two_i, two_i}},
      {x(1) + i * x(14) - x(4) - i * x(12), {0.0, -two_i, -two_i}},
      {x(2) + i * x(13) - x(5) - i * x(9), {two_i, 0.0, two_i}},
      {x(2) + i * x(13) + x(5) + i * x(9), {two_i, 0.0, -two_i}},
      {x(2) - i * x(13) + x(5) - i * x(9), {-two_i, 0.0, two_i}},
      {x(2) - i * x(13) - x(5) + i * x(9), {-two_i, 0.0, -two_i}},
      {x(3) - i * x(10) - x(6) + i * x(8), {two_i, two_i, 0.0}},
      {x(3) - i * x(10) + x(6) - i * x(8), {two_i, -two_i, 0.0}},
      {x(3) + i * x(10) + x(6) + i * x(8), {-two_i, two_i, 0.0}},
      {x(3) + i * x(10) - x(6) - i * x(8), {-two_i, -two_i, 0.0}},
  }};

  const std::array<const Matrix4*, 3> cartan{&x(7), &x(11), &x(15)};
  RootSystemReport report;
  report.cartan_dim = 3;
  for (const auto& entry : entries) {
    for (int h = 0; h < 3; ++h) {
      const Matrix4 bracket =
          (*cartan[h]) * entry.e - entry.e * (*cartan[h]);
      const double residual = (bracket - entry.eig[h] * entry.e).norm();
      report.max_residual = std::max(report.max_residual, residual);
    }
    ++report.roots_checked;
  }
  report.algebra_dim = report.cartan_dim + report.roots_checked;
  return report;
}

}  // namespace kakcell
