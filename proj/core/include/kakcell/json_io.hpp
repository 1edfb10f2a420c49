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

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "kakcell/cells.hpp"
#include "kakcell/kak.hpp"
#include "kakcell/types.hpp"

namespace kakcell {

// Shared wire formats. A matrix is {"rows": [[{"re": f64, "im": f64} x N] x N]};
// coordinates are {"c": [f64, f64, f64]} in radians, emitted with an extra
// "c_over_pi" array of rationalized pi-multiples where one exists.

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix2& m);
nlohmann::json matrix_to_json(const Matrix4& m);
Matrix4 matrix4_from_json(const nlohmann::json& j);  // throws MalformedInput

nlohmann::json coords_to_json(const CanonCoords& c);
CanonCoords coords_from_json(const nlohmann::json& j);  // throws MalformedInput

/// "p/q" when value/pi is within 1e-9 of p/q with 1 <= q <= 64 (smallest q,
/// reduced); nullopt otherwise.
std::optional<std::string> rationalize_pi_multiple(double value);

nlohmann::json decomposition_to_json(const KakDecomposition& d,
                                     double reconstruction_error);

nlohmann::json geometry_to_json(const CellGeometry& g);

/// Parse a matrix file from disk. Throws MalformedInput.
Matrix4 read_matrix_file(const std::string& path);

}  // namespace kakcell
