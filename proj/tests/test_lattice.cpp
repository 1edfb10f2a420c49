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

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "kakcell/lattice.hpp"
#include "kakcell/su4.hpp"

using namespace kakcell;

namespace {

constexpr double kPi = std::numbers::pi;

// exp_canonical(c) equals the identity
bool oracle_unit(const CanonCoords& c) {
  return (exp_canonical(c) - Matrix4::Identity()).norm() <= 1e-9;
}

// exp_canonical(c) is a local unitary with a +-1 phase absorbed into SU(2)
bool oracle_k(const CanonCoords& c) {
  try {
    const auto f = factor_local(exp_canonical(c), 1e-9);
    return std::abs(f.phase * f.phase - Complex{1, 0}) <= 1e-9;
  } catch (const NotLocal&) {
    return false;
  }
}

// exp_canonical(c) is local up to some fourth root of unity
bool oracle_p(const CanonCoords& c) {
  static const std::array<Complex, 4> roots = {
      Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  for (const Complex& eta : roots) {
    try {
      factor_local(Matrix4(exp_canonical(c) / eta), 1e-9);
      return true;
    } catch (const NotLocal&) {
    }
  }
  return false;
}

}  // namespace

TEST_CASE("closed-form membership: named examples") {
  CHECK(in_lattice(LatticeKind::Unit, {kPi, kPi, 0}));
  CHECK_FALSE(in_lattice(LatticeKind::Unit, {kPi, 0, 0}));
  CHECK(in_lattice(LatticeKind::K, {kPi / 2, kPi / 2, 0}));
  CHECK(in_lattice(LatticeKind::P, {kPi / 2, 0, 0}));
  CHECK_FALSE(in_lattice(LatticeKind::K, {kPi / 2, 0, 0}));
  CHECK(in_lattice(LatticeKind::Unit, {0, 0, 0}));
  CHECK(in_lattice(LatticeKind::K, {0, 0, 0}));
  CHECK(in_lattice(LatticeKind::P, {0, 0, 0}));
  CHECK_FALSE(in_lattice(LatticeKind::P, {kPi / 3, 0, 0}));
}

TEST_CASE("grid oracle equivalence and nesting") {
  // (pi/2) * {-4..4}^3; also exercised end-to-end by the acceptance suite
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      for (int c = -4; c <= 4; ++c) {
        const CanonCoords p{a * kPi / 2, b * kPi / 2, c * kPi / 2};
        const bool u = in_lattice(LatticeKind::Unit, p);
        const bool k = in_lattice(LatticeKind::K, p);
        const bool pp = in_lattice(LatticeKind::P, p);
        CHECK(u == oracle_unit(p));
        CHECK(k == oracle_k(p));
        CHECK(pp == oracle_p(p));
        // nesting Unit within K within P
        if (u) CHECK(k);
        if (k) CHECK(pp);
      }
    }
  }
}

TEST_CASE("minimal positive period") {
  CHECK(minimal_positive_period() == kPi / 2);

  SUBCASE("pi/2 on one axis is local up to phase i") {
    const Matrix4 m = exp_canonical({kPi / 2, 0, 0});
    // i * XX: local once the i is divided out
    const Complex i{0, 1};
    const auto f = factor_local(Matrix4(m / i), 1e-9);
    CHECK((i * f.phase * kron(f.a, f.b) - m).norm() <= 1e-12);
  }

  SUBCASE("pi/4 on one axis is not local for any fourth root") {
    CHECK_FALSE(oracle_p({kPi / 4, 0, 0}));
  }
}

TEST_CASE("diagram membership") {
  CHECK(on_diagram({kPi / 4, kPi / 4, 0.1}));  // c1 + c2 = pi/2
  CHECK_FALSE(on_diagram({0.3, 0.2, 0.1}));
  CHECK(on_diagram({0.7, 0.7, 0.123}));        // c1 - c2 = 0
  CHECK(on_diagram({0.4, 0.4, -0.9}));
  CHECK(on_diagram({0.25, 0.1, -0.1}));        // c2 + c3 = 0
}
