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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "kakcell/types.hpp"

namespace kakcell {

/// Signed permutation of the three interaction coordinates with sign product
/// +1 (zero or exactly two entries flipped). Canonical encoding is the pair
/// of integer arrays; comparisons are lexicographic so group membership needs
/// no float arithmetic.
struct WeylElement {
  // apply(w, c)[i] = sign[i] * c[perm[i]]
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  std::array<std::int8_t, 3> sign{1, 1, 1};

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

CanonCoords apply(const WeylElement& w, const CanonCoords& c);
std::array<long, 3> apply(const WeylElement& w, const std::array<long, 3>& n);

/// g then-after h: apply(compose(g, h), c) == apply(g, apply(h, c)).
WeylElement compose(const WeylElement& g, const WeylElement& h);
WeylElement inverse(const WeylElement& w);

/// The six generating reflections, in the order
/// (c1,c3,c2), (c1,-c3,-c2), (c2,c1,c3), (-c2,-c1,c3), (c3,c2,c1),
/// (-c3,c2,-c1).
const std::array<WeylElement, 6>& reflections();

/// Closure of the reflections under composition: all 24 even-sign-flip
/// signed permutations, sorted by the canonical encoding.
const std::vector<WeylElement>& weyl_group();

/// A local unitary k_w in SU(2)(x)SU(2) realizing w by conjugation:
/// k_w * exp_canonical(c) * k_w^dag == exp_canonical(apply(w, c)) for all c.
const Matrix4& local_realization(const WeylElement& w);

/// Restricted root +-e_a +- e_b of su(4) with respect to the interaction
/// Cartan subalgebra; axes 0,1,2 stand for x,y,z and axis_a < axis_b.
struct Root {
  int axis_a = 0;
  int axis_b = 1;
  int sign_a = 1;
  int sign_b = 1;
};

/// The 12 roots, ordered to match the root-vector table.
const std::array<Root, 12>& root_system();

struct RootSystemReport {
  double max_residual = 0.0;  // worst || [H, E] - eig*E ||_F over all checks
  int roots_checked = 0;
  int cartan_dim = 0;
  int algebra_dim = 0;  // cartan_dim + roots_checked
};

/// Numerically checks every tabulated root vector E against the three Cartan
/// generators: [X7, E] = a E, [X11, E] = b E, [X15, E] = c E with
/// eigenvalues in {0, +-2i}.
RootSystemReport verify_root_system();

}  // namespace kakcell
