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

#include "kakcell/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>

namespace kakcell {

using nlohmann::json;

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
      !j["re"].is_number() || !j["im"].is_number())
    throw MalformedInput("expected complex object {\"re\": f, \"im\": f}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

namespace {

template <typename M>
json matrix_to_json_impl(const M& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

}  // namespace

json matrix_to_json(const Matrix2& m) { return matrix_to_json_impl(m); }
json matrix_to_json(const Matrix4& m) { return matrix_to_json_impl(m); }

Matrix4 matrix4_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() ||
      j["rows"].size() != 4)
    throw MalformedInput("expected matrix object {\"rows\": [[...] x4]}");
  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    const json& row = j["rows"][i];
    if (!row.is_array() || row.size() != 4)
      throw MalformedInput("matrix row " + std::to_string(i) +
                           " must hold 4 complex entries");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from_json(row[k]);
  }
  if (!m.allFinite()) throw MalformedInput("matrix entries must be finite");
  return m;
}

std::optional<std::string> rationalize_pi_multiple(double value) {
  const double x = value / std::numbers::pi;
  for (long q = 1; q <= 64; ++q) {
    const double pf = x * static_cast<double>(q);
    const double pr = std::nearbyint(pf);
    if (std::abs(pf - pr) <= 1e-9 * static_cast<double>(q) &&
        std::abs(x - pr / static_cast<double>(q)) <= 1e-9) {
      long p = static_cast<long>(pr);
      long g = std::gcd(std::labs(p), q);
      if (g == 0) g = 1;
      p /= g;
      const long qq = q / g;
      if (p == 0) return std::string("0");
      if (qq == 1) return std::to_string(p);
      return std::to_string(p) + "/" + std::to_string(qq);
    }
  }
  return std::nullopt;
}

json coords_to_json(const CanonCoords& c) {
  json over_pi = json::array();
  for (int i = 0; i < 3; ++i) {
    if (auto r = rationalize_pi_multiple(c[i]))
      over_pi.push_back(*r);
    else
      over_pi.push_back(nullptr);
  }
  return json{{"c", {c.c1, c.c2, c.c3}}, {"c_over_pi", std::move(over_pi)}};
}

CanonCoords coords_from_json(const json& j) {
  if (!j.is_object() || !j.contains("c") || !j["c"].is_array() ||
      j["c"].size() != 3)
    throw MalformedInput("expected coordinates object {\"c\": [f, f, f]}");
  CanonCoords c;
  for (int i = 0; i < 3; ++i) {
    if (!j["c"][i].is_number())
      throw MalformedInput("coordinate entries must be numbers");
    c[i] = j["c"][i].get<double>();
  }
  return c;
}

json decomposition_to_json(const KakDecomposition& d,
                           double reconstruction_error) {
  json out;
  out["input_phase"] = complex_to_json(d.input_phase);
  out["ell"] = complex_to_json(d.ell);
  out["k1_a"] = matrix_to_json(d.k1_a);
  out["k1_b"] = matrix_to_json(d.k1_b);
  out["k2_a"] = matrix_to_json(d.k2_a);
  out["k2_b"] = matrix_to_json(d.k2_b);
  out["coords"] = coords_to_json(d.coords);
  out["cell"] = d.cell ? (*d.cell == CellKind::T ? "T" : "P") : "raw";
  out["reconstruction_error"] = reconstruction_error;
  return out;
}

json geometry_to_json(const CellGeometry& g) {
  json vertices = json::object();
  for (const auto& [name, c] : g.vertices)
    vertices[name] = {c.c1, c.c2, c.c3};
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  json out;
  out["cell"] = g.cell == CellKind::T ? "T" : "P";
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  if (g.seam) {
    out["seam"] = {{"vertex", g.seam->vertex},
                   {"coords", {g.seam->coords.c1, g.seam->coords.c2,
                               g.seam->coords.c3}},
                   {"across", {g.seam->across[0], g.seam->across[1]}},
                   {"note", g.seam->note}};
  }
  return out;
}

Matrix4 read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw MalformedInput("invalid JSON in " + path + ": " + e.what());
  }
  return matrix4_from_json(j);
}

}  // namespace kakcell
