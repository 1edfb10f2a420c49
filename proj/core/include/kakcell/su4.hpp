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
#include <utility>

#include "kakcell/config.hpp"
#include "kakcell/types.hpp"

namespace kakcell {

enum class PauliAxis { I, X, Y, Z };

/// Two-qubit Pauli word: one axis per qubit slot.
struct PauliLabel {
  PauliAxis first = PauliAxis::I;
  PauliAxis second = PauliAxis::I;
};

/// Single-qubit Pauli matrix (sigma_I = identity). Entries in {0, +-1, +-i}.
Matrix2 pauli(PauliAxis axis);

/// sigma_a (x) sigma_b on two qubits. Entries in {0, +-1, +-i}.
Matrix4 pauli_tensor(PauliAxis a, PauliAxis b);

/// Kronecker product of 2x2 blocks, first factor on the left qubit.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// The Bell-basis change-of-matrix Q: conjugation by Q maps the subgroup of
/// local unitaries to SO(4) and diagonalizes the canonical interaction
/// exponentials.
const Matrix4& bell_transform();

/// Basis element of su(4): X = i * (Pauli word), with its position in the
/// k (single-qubit) or p (two-qubit interaction) summand.
struct Su4BasisElement {
  Matrix4 matrix;
  PauliLabel label;
  bool in_k = false;
};

/// The 15 elements X_1..X_15: six i*sigma_a on one qubit, then the nine
/// i*sigma_a(x)sigma_b in row-major axis order.
const std::array<Su4BasisElement, 15>& su4_basis();

double frobenius_norm(const Matrix2& m);
double frobenius_norm(const Matrix4& m);

bool is_unitary(const Matrix2& m, double tol = default_tol());
bool is_unitary(const Matrix4& m, double tol = default_tol());
bool is_special(const Matrix2& m, double tol = default_tol());
bool is_special(const Matrix4& m, double tol = default_tol());

/// exp{i(c1 XX + c2 YY + c3 ZZ)} in closed form through the Bell-basis
/// diagonal with phases (c1-c2+c3, c1+c2-c3, -c1-c2-c3, -c1+c2+c3).
/// Always special unitary.
Matrix4 exp_canonical(const CanonCoords& c);

/// The four Bell-basis phases of exp_canonical in diagonal order.
std::array<double, 4> canonical_phases(const CanonCoords& c);

struct Su4Projection {
  Matrix4 v;              // special unitary
  Complex residual_phase; // unit modulus, v = u / residual_phase
};

/// Strip the U(1) factor: residual_phase is the principal fourth root of
/// det(u) (argument in (-pi/4, pi/4]). Throws NotUnitary.
Su4Projection project_su4(const Matrix4& u, double tol = default_tol());

struct LocalFactors {
  Matrix2 a;      // special unitary
  Matrix2 b;      // special unitary
  Complex phase;  // unit modulus, k = phase * (a (x) b)
};

/// Factor a locally-acting unitary into SU(2) tensor factors and a unit
/// phase, via the rank-one test on the realignment of k. Throws NotLocal
/// when the realignment's second singular value exceeds tol.
LocalFactors factor_local(const Matrix4& k, double tol = default_tol());

/// Killing form B(X, Y) = 8 tr(XY) on su(4). Throws NotInAlgebra when an
/// argument is not anti-Hermitian traceless at tol.
double killing_form(const Matrix4& x, const Matrix4& y,
                    double tol = default_tol());

}  // namespace kakcell
