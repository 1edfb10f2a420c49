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

#include "kakcell/config.hpp"
#include "kakcell/types.hpp"

namespace kakcell {

/// Closed-form membership tests.
///   Unit: all c_i in pi*Z with the integers all even or exactly two odd
///         (exp_canonical(c) == identity).
///   K:    all 2c_i in pi*Z with the same parity rule
///         (exp_canonical(c) is a local unitary).
///   P:    all c_i in (pi/2)*Z
///         (exp_canonical(c) is local up to a global phase in {1,i,-1,-i}).
/// Integrality is decided by round-to-nearest with tol on the residue.
bool in_lattice(LatticeKind kind, const CanonCoords& c,
                double tol = default_tol());

/// Smallest positive shift of a single coordinate that stays local up to a
/// global phase: pi/2.
double minimal_positive_period();

/// True iff some c_a +- c_b (a != b) lies in (pi/2)*Z within tol: the point
/// sits on a mirror hyperplane of the affine reflection arrangement.
bool on_diagram(const CanonCoords& c, double tol = default_tol());

}  // namespace kakcell
