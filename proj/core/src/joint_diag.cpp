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

#include "joint_diag.hpp"

#include <cmath>

namespace kakcell::detail {

double joint_offdiagonal(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) {
  double off = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (p != q) off += a(p, q) * a(p, q) + b(p, q) * b(p, q);
  return off;
}

namespace {

// Jacobi angle for the (p, q) plane that maximizes the joint diagonal mass:
// the dominant eigenvector (x, y), x >= 0, of
//   G = sum_k h_k h_k^T,  h_k = (M_k(p,p) - M_k(q,q), 2 M_k(p,q)),
// gives cos = sqrt((x + r)/(2r)), sin = y / (2 r cos).
bool joint_rotation(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b, int p,
                    int q, double& c, double& s) {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  for (const Eigen::Matrix4d* m : {&a, &b}) {
    const double h1 = (*m)(p, p) - (*m)(q, q);
    const double h2 = (*m)(p, q) + (*m)(q, p);
    g11 += h1 * h1;
    g12 += h1 * h2;
    g22 += h2 * h2;
  }
  const double mid = 0.5 * (g11 - g22);
  const double lam = 0.5 * (g11 + g22) + std::hypot(mid, g12);
  // dominant eigenvector of [[g11, g12], [g12, g22]]
  double x, y;
  if (std::abs(g12) > 1e-300) {
    x = lam - g22;
    y = g12;
  } else {
    // already axis-aligned: larger diagonal entry decides
    x = g11 >= g22 ? 1.0 : 0.0;
    y = g11 >= g22 ? 0.0 : 1.0;
  }
  if (x < 0.0) {
    x = -x;
    y = -y;
  }
  const double r = std::hypot(x, y);
  if (r < 1e-300 || std::abs(y) < 1e-300) return false;  // nothing to rotate
  c = std::sqrt((x + r) / (2.0 * r));
  s = y / (2.0 * r * c);
  return true;
}

void rotate_pair(Eigen::Matrix4d& m, int p, int q, double c, double s) {
  for (int k = 0; k < 4; ++k) {
    const double mkp = m(k, p), mkq = m(k, q);
    m(k, p) = c * mkp + s * mkq;
    m(k, q) = -s * mkp + c * mkq;
  }
  for (int k = 0; k < 4; ++k) {
    const double mpk = m(p, k), mqk = m(q, k);
    m(p, k) = c * mpk + s * mqk;
    m(q, k) = -s * mpk + c * mqk;
  }
}

}  // namespace

Eigen::Matrix4d joint_diagonalize(Eigen::Matrix4d& a, Eigen::Matrix4d& b,
                                  int max_sweeps) {
  Eigen::Matrix4d o = Eigen::Matrix4d::Identity();
  const double scale = a.norm() + b.norm() + 1.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (joint_offdiagonal(a, b) < 1e-30 * scale * scale) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        double c = 1.0, s = 0.0;
        if (!joint_rotation(a, b, p, q, c, s)) continue;
        rotate_pair(a, p, q, c, s);
        rotate_pair(b, p, q, c, s);
        for (int k = 0; k < 4; ++k) {
          const double okp = o(k, p), okq = o(k, q);
          o(k, p) = c * okp + s * okq;
          o(k, q) = -s * okp + c * okq;
        }
      }
    }
  }
  return o;
}

}  // namespace kakcell::detail
