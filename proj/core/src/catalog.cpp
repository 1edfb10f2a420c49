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

#include "kakcell/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kakcell/su4.hpp"

namespace kakcell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Angle of the chi gate: arccos(1/5)/8.
double chi_angle() {
  static const double value = std::acos(0.2) / 8.0;
  return value;
}

// Square root of a gate that is diagonal in the Bell basis, halving each
// eigenvalue argument on the [-pi, pi) branch (the branch that matches the
// reference coordinate tables: the singlet eigenvalue -1 of SWAP roots to
// -i, not +i).
Matrix4 bell_principal_sqrt(const Matrix4& g) {
  const Matrix4& q = bell_transform();
  const Matrix4 d = q.adjoint() * g * q;
  Eigen::Vector4cd roots;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      if (j != k && std::abs(d(j, k)) > 1e-12)
        throw std::logic_error("bell_principal_sqrt: gate not Bell-diagonal");
    }
    double a = std::arg(d(j, j));
    if (a >= std::numbers::pi) a = -std::numbers::pi;
    roots(j) = std::polar(std::sqrt(std::abs(d(j, j))), a / 2);
  }
  return q * roots.asDiagonal() * q.adjoint();
}

Matrix4 plain_matrix(Gate base) {
  Matrix4 m = Matrix4::Zero();
  switch (base) {
    case Gate::I:
      return Matrix4::Identity();
    case Gate::Swap:
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    case Gate::SqrtSwap:
      return bell_principal_sqrt(plain_matrix(Gate::Swap));
    case Gate::ISwap:
      m(0, 0) = 1;
      m(1, 2) = kI;
      m(2, 1) = kI;
      m(3, 3) = 1;
      return m;
    case Gate::SqrtISwap:
      return bell_principal_sqrt(plain_matrix(Gate::ISwap));
    case Gate::Cnot:
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
    case Gate::B:
      return exp_canonical(reference_coords({Gate::B, false}, CellKind::P));
    case Gate::Qft: {
      // 4-point DFT, entries i^(jk)/2, kept exact via the period-4 cycle
      const Complex cycle[4] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) m(j, k) = cycle[(j * k) % 4];
      return m;
    }
    case Gate::Chi:
      return exp_canonical(reference_coords({Gate::Chi, false}, CellKind::P));
  }
  throw std::logic_error("plain_matrix: unknown gate");
}

std::string base_name(Gate base) {
  switch (base) {
    case Gate::I: return "I";
    case Gate::Swap: return "SWAP";
    case Gate::SqrtSwap: return "sqrtSWAP";
    case Gate::ISwap: return "iSWAP";
    case Gate::SqrtISwap: return "sqrtiSWAP";
    case Gate::Cnot: return "CNOT";
    case Gate::B: return "B";
    case Gate::Qft: return "QFT";
    case Gate::Chi: return "chi";
  }
  throw std::logic_error("base_name: unknown gate");
}

}  // namespace

std::string to_string(const GateName& name) {
  std::string out = base_name(name.base);
  if (name.primed) out += "'";
  return out;
}

std::optional<GateName> parse_gate_name(std::string_view text) {
  bool primed = false;
  if (!text.empty() && (text.back() == '\'')) {
    primed = true;
    text.remove_suffix(1);
  }
  for (Gate base : {Gate::I, Gate::Swap, Gate::SqrtSwap, Gate::ISwap,
                    Gate::SqrtISwap, Gate::Cnot, Gate::B, Gate::Qft,
                    Gate::Chi}) {
    if (text == base_name(base)) return GateName{base, primed};
  }
  return std::nullopt;
}

const std::vector<GateName>& all_gate_names() {
  static const std::vector<GateName> names = [] {
    std::vector<GateName> out;
    for (bool primed : {false, true})
      for (Gate base : {Gate::I, Gate::Swap, Gate::SqrtSwap, Gate::ISwap,
                        Gate::SqrtISwap, Gate::Cnot, Gate::B, Gate::Qft,
                        Gate::Chi})
        out.push_back({base, primed});
    return out;
  }();
  return names;
}

Matrix4 gate_matrix(const GateName& name) {
  const Matrix4 m = plain_matrix(name.base);
  return name.primed ? Matrix4(kI * m) : m;
}

CanonCoords reference_coords(const GateName& name, CellKind cell) {
  const double p4 = kPi / 4, p8 = kPi / 8;
  const double chi = chi_angle();
  if (name.primed && cell == CellKind::T) {
    switch (name.base) {
      case Gate::I: return {kPi / 2, 0, 0};
      case Gate::Swap: return {p4, p4, -p4};
      case Gate::SqrtSwap: return {3 * p8, p8, -p8};
      case Gate::ISwap: return {p4, p4, 0};
      case Gate::SqrtISwap: return {3 * p8, p8, 0};
      case Gate::Cnot: return {p4, 0, 0};
      case Gate::B: return {p4, p8, 0};
      case Gate::Qft: return {p4, p4, -p8};
      case Gate::Chi: return {p4 + chi, p8, -chi};
    }
  }
  // Plain gates share their T- and P-cell coordinates; primed gates fall on
  // the same P-cell point as their plain partner.
  switch (name.base) {
    case Gate::I: return {0, 0, 0};
    case Gate::Swap: return {p4, p4, p4};
    case Gate::SqrtSwap: return {p8, p8, p8};
    case Gate::ISwap: return {p4, p4, 0};
    case Gate::SqrtISwap: return {p8, p8, 0};
    case Gate::Cnot: return {p4, 0, 0};
    case Gate::B: return {p4, p8, 0};
    case Gate::Qft: return {p4, p4, p8};
    case Gate::Chi: return {p4 - chi, p8, chi};
  }
  throw std::logic_error("reference_coords: unknown gate");
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = [] {
    std::vector<ReferenceEntry> out;
    for (const GateName& name : all_gate_names()) {
      out.push_back({name, reference_coords(name, CellKind::T),
                     reference_coords(name, CellKind::P)});
    }
    return out;
  }();
  return table;
}

}  // namespace kakcell
