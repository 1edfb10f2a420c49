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

#include <Eigen/QR>
#include <complex>
#include <random>

#include "kakcell/su4.hpp"
#include "kakcell/types.hpp"

namespace kakcell::testing {

// Haar-random U(4): QR of a complex Ginibre matrix with the R-diagonal
// phases folded back in.
inline Matrix4 haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  Eigen::HouseholderQR<Matrix4> qr(g);
  Matrix4 q = qr.householderQ();
  const Matrix4& packed = qr.matrixQR();
  for (int j = 0; j < 4; ++j) {
    const Complex d = packed(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

// Haar-random SU(2).
inline Matrix2 haar_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  // unit quaternion
  double q0 = normal(rng), q1 = normal(rng), q2 = normal(rng),
         q3 = normal(rng);
  const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  q0 /= n;
  q1 /= n;
  q2 /= n;
  q3 /= n;
  Matrix2 m;
  m << Complex{q0, q3}, Complex{q2, q1}, Complex{-q2, q1}, Complex{q0, -q3};
  return m;
}

inline Matrix4 random_local(std::mt19937_64& rng) {
  return kron(haar_su2(rng), haar_su2(rng));
}

// Direct Kronecker product by index arithmetic, independent of kron().
inline Matrix4 kron_oracle(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = a(i / 2, j / 2) * b(i % 2, j % 2);
  return m;
}

inline CanonCoords random_coords(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return {dist(rng), dist(rng), dist(rng)};
}

}  // namespace kakcell::testing
