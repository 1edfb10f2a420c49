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

#include <optional>

#include "kakcell/config.hpp"
#include "kakcell/types.hpp"

namespace kakcell {

/// Full factorization u = input_phase * ell * (k1_a (x) k1_b) *
/// exp_canonical(coords) * (k2_a (x) k2_b).
///
/// input_phase carries the residual U(1) of non-special inputs (1 for
/// SU(4) inputs up to the fourth-root split); ell is an exact fourth root
/// of unity; the four 2x2 factors are special unitary. When `cell` is set,
/// coords is the unique representative in that fundamental domain.
struct KakDecomposition {
  Complex input_phase{1.0, 0.0};
  Complex ell{1.0, 0.0};
  Matrix2 k1_a, k1_b, k2_a, k2_b;
  CanonCoords coords;
  std::optional<CellKind> cell;  // nullopt: raw coordinates
};

/// Constructive KAK factorization through the Bell basis. Throws NotUnitary
/// for non-unitary input and DegenerateRecovery if the simultaneous
/// diagonalization cannot be validated after seeded perturbation retries.
KakDecomposition kak_decompose(const Matrix4& u,
                               std::optional<CellKind> cell = std::nullopt,
                               double tol = default_tol());

/// input_phase * ell * (k1_a (x) k1_b) * exp_canonical(coords) *
/// (k2_a (x) k2_b).
Matrix4 reconstruct(const KakDecomposition& d);

/// Frobenius distance between reconstruct(d) and u.
double reconstruction_error(const KakDecomposition& d, const Matrix4& u);

}  // namespace kakcell
