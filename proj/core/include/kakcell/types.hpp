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

#include <Eigen/Core>
#include <Eigen/LU>
#include <cassert>
#include <complex>
#include <stdexcept>
#include <string>

namespace kakcell {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Interaction coordinates [c1, c2, c3] in radians: the coefficients of the
/// commuting two-qubit generators XX, YY, ZZ in the canonical exponential.
struct CanonCoords {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator[](int i) const {
    assert(i >= 0 && i < 3);
    return i == 0 ? c1 : (i == 1 ? c2 : c3);
  }
  double& operator[](int i) {
    assert(i >= 0 && i < 3);
    return i == 0 ? c1 : (i == 1 ? c2 : c3);
  }
};

inline CanonCoords operator+(const CanonCoords& a, const CanonCoords& b) {
  return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
inline CanonCoords operator-(const CanonCoords& a, const CanonCoords& b) {
  return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}
inline CanonCoords operator-(const CanonCoords& a) {
  return {-a.c1, -a.c2, -a.c3};
}
inline CanonCoords operator*(double s, const CanonCoords& a) {
  return {s * a.c1, s * a.c2, s * a.c3};
}

/// Largest absolute coordinate difference.
inline double max_abs_diff(const CanonCoords& a, const CanonCoords& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// Fundamental domain selector: T is the double-coset (local-equivalence)
/// cell, P the projective cell that also quotients global phases.
enum class CellKind { T, P };

enum class LatticeKind { Unit, K, P };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input fails the unitarity predicate at the requested tolerance.
struct NotUnitary : Error {
  using Error::Error;
};

/// 4x4 unitary is not a tensor product of 2x2 factors (up to phase).
struct NotLocal : Error {
  using Error::Error;
};

/// Argument is not anti-Hermitian traceless at the requested tolerance.
struct NotInAlgebra : Error {
  using Error::Error;
};

/// The eigenstructure recovery failed after perturbation retries. Signals a
/// numerical pathology, not a mathematical one.
struct DegenerateRecovery : Error {
  using Error::Error;
};

/// Coordinates handed to a cell-restricted operation lie outside the cell.
struct OutOfCell : Error {
  using Error::Error;
};

/// Unparseable file or argument (CLI input layer).
struct MalformedInput : Error {
  using Error::Error;
};

}  // namespace kakcell
