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

namespace kakcell {

/// Process-wide default tolerance for all numeric predicates (unitarity,
/// coordinate equality, lattice membership). Every operation that takes a
/// `tol` parameter defaults to this value. Honors the KAK_TOL environment
/// variable when it parses to a positive double; otherwise 1e-9.
double default_tol();

/// Coordinates closer than this to a cell boundary value (0, pi/4, pi/2, an
/// equal entry) are snapped before the canonicalizers branch on them.
inline constexpr double snap_eps = 1e-11;

}  // namespace kakcell
