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
#include <string>
#include <utility>
#include <vector>

#include "kakcell/config.hpp"
#include "kakcell/types.hpp"
#include "kakcell/weyl.hpp"

namespace kakcell {

struct CellPoint {
  CanonCoords coords;
  CellKind cell = CellKind::T;
};

/// Affine move in the (projective) affine Weyl group, tracked exactly:
/// output = apply(w, input) + (pi/2) * half_periods.
struct CellMove {
  WeylElement w;
  std::array<long, 3> half_periods{0, 0, 0};
};

/// Reduce coordinates to the tetrahedral cell
///   pi/2 > c1 >= c2 >= |c3| >= 0,  c1 + c2 <= pi/2.
/// The single orbit whose closure point is the vertex [pi/2, 0, 0] has no
/// representative with c1 < pi/2 and canonicalizes to that vertex.
CellPoint canonicalize_T(const CanonCoords& c);

/// Reduce coordinates to the projective cell
///   pi/2 > c1 >= c2 >= c3 >= 0,  c1 + c2 <= pi/2,  (c3 = 0 => c1 <= pi/4),
/// where the c3 = 0 clause uses the snapped value.
CellPoint canonicalize_P(const CanonCoords& c);

CellPoint canonicalize(const CanonCoords& c, CellKind cell);

/// Same reduction, also reporting the exact group move that was applied.
CellPoint canonicalize_with_move(const CanonCoords& c, CellKind cell,
                                 CellMove& move);

/// Membership with boundary inclusion exactly as the defining inequalities
/// state (the pi/2 > c1 face is strict).
bool in_cell(const CanonCoords& c, CellKind cell, double tol = default_tol());

/// Topological closure of the cell region: the strict face is closed and
/// the P seam clause (a removed half-face of measure zero) is not applied.
bool in_cell_closure(const CanonCoords& c, CellKind cell,
                     double tol = default_tol());

/// T-cell point of i*U given the T-cell point of U:
/// canonicalize_T([pi/2 - c1, c2, -c3]). Involutive on the cell. Throws
/// OutOfCell when c is not in the (closed) T-cell.
CanonCoords phase_partner_T(const CanonCoords& c, double tol = default_tol());

/// True iff the T-cell coordinates of the two unitaries agree within tol
/// (equality up to left/right local unitaries, on SU(4) projections).
bool locally_equivalent(const Matrix4& u, const Matrix4& v,
                        double tol = default_tol());

/// True iff the P-cell coordinates agree within tol (equality up to local
/// unitaries and a global phase).
bool projective_locally_equivalent(const Matrix4& u, const Matrix4& v,
                                   double tol = default_tol());

struct CellSeam {
  std::string vertex;  // "S"
  CanonCoords coords;
  std::array<std::string, 2> across;  // the segment the gluing reflects over
  std::string note;
};

struct CellGeometry {
  CellKind cell = CellKind::T;
  std::vector<std::pair<std::string, CanonCoords>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<CellSeam> seam;  // P only
};

/// Polytope data behind the cell figures: T is the tetrahedron O,A,B,U and
/// P the tetrahedron O,A,B,C whose base triangles OCS and BCS are identified
/// by the reflection across the segment SC.
CellGeometry cell_geometry(CellKind cell);

}  // namespace kakcell
