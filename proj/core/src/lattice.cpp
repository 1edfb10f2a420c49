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

#include "kakcell/lattice.hpp"

#include <cmath>
#include <numbers>

namespace kakcell {

namespace {

constexpr double kPi = std::numbers::pi;

// Nearest integer to value/unit, or nullopt if the residue exceeds tol.
bool nearest_multiple(double value, double unit, double tol, long& out) {
  const double q = value / unit;
  const double k = std::nearbyint(q);
  if (std::abs(value - k * unit) > tol) return false;
  out = static_cast<long>(k);
  return true;
}

bool parity_even_or_two_odd(const std::array<long, 3>& k) {
  const int odd = static_cast<int>((k[0] & 1L) != 0) +
                  static_cast<int>((k[1] & 1L) != 0) +
                  static_cast<int>((k[2] & 1L) != 0);
  return odd == 0 || odd == 2;
}

}  // namespace

bool in_lattice(LatticeKind kind, const CanonCoords& c, double tol) {
  std::array<long, 3> k{};
  switch (kind) {
    case LatticeKind::Unit:
      for (int i = 0; i < 3; ++i)
        if (!nearest_multiple(c[i], kPi, tol, k[i])) return false;
      return parity_even_or_two_odd(k);
    case LatticeKind::K:
      for (int i = 0; i < 3; ++i)
        if (!nearest_multiple(c[i], kPi / 2, tol, k[i])) return false;
      return parity_even_or_two_odd(k);
    case LatticeKind::P:
      for (int i = 0; i < 3; ++i)
        if (!nearest_multiple(c[i], kPi / 2, tol, k[i])) return false;
      return true;
  }
  return false;
}

double minimal_positive_period() { return kPi / 2; }

bool on_diagram(const CanonCoords& c, double tol) {
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (const double s : {1.0, -1.0}) {
        long k = 0;
        if (nearest_multiple(c[a] + s * c[b], kPi / 2, tol, k)) return true;
      }
    }
  }
  return false;
}

}  // namespace kakcell
