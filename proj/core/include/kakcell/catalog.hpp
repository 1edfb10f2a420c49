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
#include <string_view>
#include <vector>

#include "kakcell/types.hpp"

namespace kakcell {

enum class Gate { I, Swap, SqrtSwap, ISwap, SqrtISwap, Cnot, B, Qft, Chi };

/// Named gate; the primed variant is i times the plain one.
struct GateName {
  Gate base = Gate::I;
  bool primed = false;

  friend bool operator==(const GateName&, const GateName&) = default;
};

/// "SWAP", "sqrtiSWAP'", "chi", ... Primed variants carry a trailing
/// apostrophe.
std::string to_string(const GateName& name);
std::optional<GateName> parse_gate_name(std::string_view text);

/// All 18 names, plain gates first.
const std::vector<GateName>& all_gate_names();

/// Computational-basis matrix. SWAP/iSWAP/CNOT/QFT are the standard
/// matrices (QFT is the 4-point DFT with entries i^(jk)/2); the square
/// roots are principal roots taken in the Bell basis; B and chi are defined
/// as exp_canonical of their reference coordinates; primed = i * plain.
Matrix4 gate_matrix(const GateName& name);

/// Tabulated cell coordinates of the named gate.
CanonCoords reference_coords(const GateName& name, CellKind cell);

struct ReferenceEntry {
  GateName name;
  CanonCoords t_coords;
  CanonCoords p_coords;
};

const std::vector<ReferenceEntry>& reference_table();

}  // namespace kakcell
