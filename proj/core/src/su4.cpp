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

#include "kakcell/su4.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace kakcell {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Matrix2 pauli(PauliAxis axis) {
  Matrix2 m = Matrix2::Zero();
  switch (axis) {
    case PauliAxis::I:
      m << 1, 0, 0, 1;
      break;
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, -kI, kI, 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix4 pauli_tensor(PauliAxis a, PauliAxis b) {
  return kron(pauli(a), pauli(b));
}

const Matrix4& bell_transform() {
  static const Matrix4 q = [] {
    const double s = 1.0 / std::numbers::sqrt2;
    Matrix4 m;
    m << s, 0, 0, kI * s,
         0, kI * s, s, 0,
         0, kI * s, -s, 0,
         s, 0, 0, -kI * s;
    return m;
  }();
  return q;
}

const std::array<Su4BasisElement, 15>& su4_basis() {
  static const std::array<Su4BasisElement, 15> basis = [] {
    std::array<Su4BasisElement, 15> out;
    const std::array<PauliAxis, 3> axes{PauliAxis::X, PauliAxis::Y,
                                        PauliAxis::Z};
    int idx = 0;
    for (PauliAxis a : axes)
      out[idx++] = {kI * pauli_tensor(a, PauliAxis::I), {a, PauliAxis::I},
                    true};
    for (PauliAxis a : axes)
      out[idx++] = {kI * pauli_tensor(PauliAxis::I, a), {PauliAxis::I, a},
                    true};
    for (PauliAxis a : axes)
      for (PauliAxis b : axes)
        out[idx++] = {kI * pauli_tensor(a, b), {a, b}, false};
    return out;
  }();
  return basis;
}

double frobenius_norm(const Matrix2& m) { return m.norm(); }
double frobenius_norm(const Matrix4& m) { return m.norm(); }

bool is_unitary(const Matrix2& m, double tol) {
  return (m.adjoint() * m - Matrix2::Identity()).norm() <= tol &&
         m.allFinite();
}

bool is_unitary(const Matrix4& m, double tol) {
  return (m.adjoint() * m - Matrix4::Identity()).norm() <= tol &&
         m.allFinite();
}

bool is_special(const Matrix2& m, double tol) {
  return std::abs(m.determinant() - Complex{1.0, 0.0}) <= tol;
}

bool is_special(const Matrix4& m, double tol) {
  return std::abs(m.determinant() - Complex{1.0, 0.0}) <= tol;
}

std::array<double, 4> canonical_phases(const CanonCoords& c) {
  return {c.c1 - c.c2 + c.c3, c.c1 + c.c2 - c.c3, -c.c1 - c.c2 - c.c3,
          -c.c1 + c.c2 + c.c3};
}

Matrix4 exp_canonical(const CanonCoords& c) {
  const auto phases = canonical_phases(c);
  Eigen::Vector4cd d;
  for (int j = 0; j < 4; ++j) d(j) = std::polar(1.0, phases[j]);
  const Matrix4& q = bell_transform();
  return q * d.asDiagonal() * q.adjoint();
}

// Argument on [-pi, pi): the branch under which the fourth-root split of
// gates with determinant on the cut (SWAP, CNOT, sqrt(SWAP)) reproduces the
// reference coordinate tables.
static double arg_lower_branch(const Complex& z) {
  double a = std::arg(z);
  if (a >= std::numbers::pi) a = -std::numbers::pi;
  return a;
}

Su4Projection project_su4(const Matrix4& u, double tol) {
  if (!is_unitary(u, tol)) throw NotUnitary("project_su4: input not unitary");
  const Complex det = u.determinant();
  const Complex phase = std::polar(1.0, arg_lower_branch(det) / 4.0);
  return {u / phase, phase};
}

LocalFactors factor_local(const Matrix4& k, double tol) {
  if (!is_unitary(k, tol)) throw NotUnitary("factor_local: input not unitary");

  // Realignment: R[(2i+j), (2p+q)] = k(2i+p, 2j+q). A tensor product
  // a (x) b realigns to the rank-one matrix vec(a) vec(b)^T.
  Matrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          r(2 * i + j, 2 * p + q) = k(2 * i + p, 2 * j + q);

  Eigen::JacobiSVD<Matrix4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(1) > tol)
    throw NotLocal("factor_local: second realignment singular value " +
                   std::to_string(sv(1)) + " exceeds tolerance");

  const double scale = std::sqrt(sv(0));
  const Eigen::Vector4cd va = svd.matrixU().col(0) * scale;
  const Eigen::Vector4cd vb = svd.matrixV().col(0).conjugate() * scale;
  Matrix2 ap, bp;
  ap << va(0), va(1), va(2), va(3);
  bp << vb(0), vb(1), vb(2), vb(3);

  // SU(2) lift: divide out the principal square root of each determinant
  // and push the compensating scalar into the phase.
  const Complex sa = std::sqrt(ap.determinant());
  const Complex sb = std::sqrt(bp.determinant());
  LocalFactors out;
  out.a = ap / sa;
  out.b = bp / sb;
  Complex phase = sa * sb;
  out.phase = phase / std::abs(phase);
  return out;
}

double killing_form(const Matrix4& x, const Matrix4& y, double tol) {
  const auto check = [&](const Matrix4& m, const char* which) {
    if ((m + m.adjoint()).norm() > tol || std::abs(m.trace()) > tol)
      throw NotInAlgebra(std::string("killing_form: ") + which +
                         " is not anti-Hermitian traceless");
  };
  check(x, "first argument");
  check(y, "second argument");
  const Complex t = 8.0 * (x * y).trace();
  // tr(XY) is real for su(4) pairs; a large imaginary part means the inputs
  // slipped past the algebra check.
  if (std::abs(t.imag()) > tol) {
    throw NotInAlgebra("killing_form: trace has non-real part " +
                       std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace kakcell
