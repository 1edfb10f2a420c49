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

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kakcell/catalog.hpp"
#include "kakcell/cells.hpp"
#include "kakcell/config.hpp"
#include "kakcell/json_io.hpp"
#include "kakcell/kak.hpp"
#include "kakcell/lattice.hpp"
#include "kakcell/su4.hpp"
#include "kakcell/weyl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kakcell;

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitNotUnitary = 2;
constexpr int kExitDegenerate = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

std::optional<CellKind> parse_cell(const std::string& name) {
  if (name == "T") return CellKind::T;
  if (name == "P") return CellKind::P;
  return std::nullopt;
}

json decompose_one(const fs::path& path, std::optional<CellKind> cell,
                   double tol) {
  const Matrix4 u = read_matrix_file(path.string());
  const KakDecomposition d = kak_decompose(u, cell, tol);
  return decomposition_to_json(d, reconstruction_error(d, u));
}

int run_decompose(const std::string& input, const std::string& cell_name,
                  double tol) {
  std::optional<CellKind> cell;
  if (!cell_name.empty()) {
    cell = parse_cell(cell_name);
    if (!cell) throw MalformedInput("unknown cell: " + cell_name);
  }
  const fs::path path(input);
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    json out = json::object();
    for (const auto& f : files)
      out[f.filename().string()] = decompose_one(f, cell, tol);
    emit(out);
  } else {
    emit(decompose_one(path, cell, tol));
  }
  return 0;
}

int run_canon(double c1, double c2, double c3, const std::string& cell_name) {
  const auto cell = parse_cell(cell_name);
  if (!cell) throw MalformedInput("unknown cell: " + cell_name);
  const CellPoint p = canonicalize({c1, c2, c3}, *cell);
  json out = coords_to_json(p.coords);
  out["cell"] = cell_name;
  emit(out);
  return 0;
}

int run_equiv(const std::string& a_path, const std::string& b_path,
              bool projective, double tol) {
  const Matrix4 a = read_matrix_file(a_path);
  const Matrix4 b = read_matrix_file(b_path);
  const CellKind cell = projective ? CellKind::P : CellKind::T;
  const auto da = kak_decompose(a, cell, tol);
  const auto db = kak_decompose(b, cell, tol);
  const bool eq = max_abs_diff(da.coords, db.coords) <= tol;
  emit(json{{"equivalent", eq},
            {"projective", projective},
            {"coords_a", coords_to_json(da.coords)},
            {"coords_b", coords_to_json(db.coords)}});
  return 0;
}

int run_orbit(double c1, double c2, double c3, const std::string& cell_name,
              int bound) {
  const auto cell = parse_cell(cell_name);
  if (!cell) throw MalformedInput("unknown cell: " + cell_name);
  if (bound < 0 || bound > 8)
    throw MalformedInput("orbit bound must be between 0 and 8");
  const CanonCoords c{c1, c2, c3};
  const double step = minimal_positive_period();
  // per-axis fundamental period: pi for the K-lattice, pi/2 for the p-lattice
  const int n = *cell == CellKind::T ? 2 * bound : bound;
  std::vector<CanonCoords> points;
  for (const WeylElement& w : weyl_group()) {
    const CanonCoords d = apply(w, c);
    for (int a = -n; a <= n; ++a) {
      for (int b = -n; b <= n; ++b) {
        for (int e = -n; e <= n; ++e) {
          if (*cell == CellKind::T) {
            const int odd = (a & 1) + (b & 1) + (e & 1);
            if (odd != 0 && odd != 2) continue;
          }
          points.push_back(
              {d.c1 + a * step, d.c2 + b * step, d.c3 + e * step});
        }
      }
    }
  }
  std::sort(points.begin(), points.end(),
            [](const CanonCoords& x, const CanonCoords& y) {
              for (int i = 0; i < 3; ++i) {
                if (x[i] < y[i] - 1e-9) return true;
                if (x[i] > y[i] + 1e-9) return false;
              }
              return false;
            });
  std::vector<CanonCoords> unique_points;
  for (const CanonCoords& p : points)
    if (unique_points.empty() || max_abs_diff(unique_points.back(), p) > 1e-9)
      unique_points.push_back(p);
  json list = json::array();
  for (const CanonCoords& p : unique_points) list.push_back(coords_to_json(p));
  emit(json{{"cell", cell_name},
            {"bound", bound},
            {"count", unique_points.size()},
            {"points", std::move(list)}});
  return 0;
}

int run_lattice_check(double c1, double c2, double c3, double tol) {
  const CanonCoords c{c1, c2, c3};
  emit(json{{"coords", coords_to_json(c)},
            {"unit", in_lattice(LatticeKind::Unit, c, tol)},
            {"k", in_lattice(LatticeKind::K, c, tol)},
            {"p", in_lattice(LatticeKind::P, c, tol)},
            {"on_diagram", on_diagram(c, tol)}});
  return 0;
}

std::string pi_label(double v) {
  if (auto r = rationalize_pi_multiple(v)) {
    if (*r == "0") return "0";
    if (*r == "1") return "pi";
    if (*r == "-1") return "-pi";
    return *r + " pi";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

int run_catalog(bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const ReferenceEntry& e : reference_table()) {
      out.push_back(json{{"name", to_string(e.name)},
                         {"matrix", matrix_to_json(gate_matrix(e.name))},
                         {"t_coords", coords_to_json(e.t_coords)},
                         {"p_coords", coords_to_json(e.p_coords)}});
    }
    emit(out);
    return 0;
  }
  std::printf("%-12s %-28s %-28s\n", "gate", "T-cell", "P-cell");
  for (const ReferenceEntry& e : reference_table()) {
    const auto fmt = [](const CanonCoords& c) {
      return "[" + pi_label(c.c1) + ", " + pi_label(c.c2) + ", " +
             pi_label(c.c3) + "]";
    };
    std::printf("%-12s %-28s %-28s\n", to_string(e.name).c_str(),
                fmt(e.t_coords).c_str(), fmt(e.p_coords).c_str());
  }
  return 0;
}

int run_cell_geometry(const std::string& cell_name, const std::string& out_path,
                      const std::string& points) {
  const auto cell = parse_cell(cell_name);
  if (!cell) throw MalformedInput("unknown cell: " + cell_name);
  json out = geometry_to_json(cell_geometry(*cell));
  if (points == "gates") {
    json markers = json::object();
    for (const ReferenceEntry& e : reference_table()) {
      const CanonCoords& c =
          *cell == CellKind::T ? e.t_coords : e.p_coords;
      markers[to_string(e.name)] = {c.c1, c.c2, c.c3};
    }
    out["points"] = std::move(markers);
  } else if (!points.empty()) {
    throw MalformedInput("unknown --points selector: " + points);
  }
  if (out_path.empty()) {
    emit(out);
  } else {
    std::ofstream f(out_path);
    if (!f) throw MalformedInput("cannot write file: " + out_path);
    f << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KAK decomposition and canonical-cell tools for two-qubit "
               "unitaries"};
  app.require_subcommand(1);
  const double tol_default = default_tol();

  std::string input, cell_name, a_path, b_path, out_path, points;
  double tol = tol_default;
  double c1 = 0, c2 = 0, c3 = 0;
  bool projective = false, as_json = false;
  int bound = 1;

  auto* dec = app.add_subcommand("decompose",
                                 "KAK-decompose a matrix file (or every "
                                 ".json file in a directory)");
  dec->add_option("input", input, "matrix JSON file or directory")->required();
  dec->add_option("--cell", cell_name, "fundamental domain: T or P");
  dec->add_option("--tol", tol, "numeric tolerance");

  auto* canon = app.add_subcommand("canon", "canonicalize coordinates");
  canon->add_option("c1", c1)->required();
  canon->add_option("c2", c2)->required();
  canon->add_option("c3", c3)->required();
  canon->add_option("--cell", cell_name, "fundamental domain: T or P")
      ->required();

  auto* equiv = app.add_subcommand("equiv",
                                   "decide (projective-)local equivalence of "
                                   "two gates");
  equiv->add_option("a", a_path, "first matrix JSON file")->required();
  equiv->add_option("b", b_path, "second matrix JSON file")->required();
  equiv->add_flag("--projective", projective,
                  "ignore global phases (P-cell comparison)");
  equiv->add_option("--tol", tol, "numeric tolerance");

  auto* orbit = app.add_subcommand("orbit",
                                   "enumerate the affine-Weyl orbit of a "
                                   "coordinate triple");
  orbit->add_option("c1", c1)->required();
  orbit->add_option("c2", c2)->required();
  orbit->add_option("c3", c3)->required();
  orbit->add_option("--cell", cell_name, "lattice selector: T or P")
      ->required();
  orbit->add_option("--bound", bound, "translations within this many lattice "
                                      "periods per axis");

  auto* lat = app.add_subcommand("lattice-check",
                                 "membership in the unit/K/p lattices and "
                                 "the mirror diagram");
  lat->add_option("c1", c1)->required();
  lat->add_option("c2", c2)->required();
  lat->add_option("c3", c3)->required();
  lat->add_option("--tol", tol, "numeric tolerance");

  auto* cat = app.add_subcommand("catalog", "named two-qubit gates and their "
                                            "cell coordinates");
  cat->add_flag("--json", as_json, "emit JSON instead of a table");

  auto* geo = app.add_subcommand("cell-geometry",
                                 "polytope data for the T or P cell");
  geo->add_option("--cell", cell_name, "T or P")->required();
  geo->add_option("-o,--output", out_path, "write JSON here instead of stdout");
  geo->add_option("--points", points, "\"gates\" adds catalog gate markers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("MalformedInput", e.what());
    return kExitMalformed;
  }

  try {
    if (dec->parsed()) return run_decompose(input, cell_name, tol);
    if (canon->parsed()) return run_canon(c1, c2, c3, cell_name);
    if (equiv->parsed()) return run_equiv(a_path, b_path, projective, tol);
    if (orbit->parsed()) return run_orbit(c1, c2, c3, cell_name, bound);
    if (lat->parsed()) return run_lattice_check(c1, c2, c3, tol);
    if (cat->parsed()) return run_catalog(as_json);
    if (geo->parsed()) return run_cell_geometry(cell_name, out_path, points);
  } catch (const NotUnitary& e) {
    emit_error("NotUnitary", e.what());
    return kExitNotUnitary;
  } catch (const DegenerateRecovery& e) {
    emit_error("DegenerateRecovery", e.what());
    return kExitDegenerate;
  } catch (const MalformedInput& e) {
    emit_error("MalformedInput", e.what());
    return kExitMalformed;
  } catch (const Error& e) {
    emit_error("Error", e.what());
    return kExitMalformed;
  } catch (const std::exception& e) {
    emit_error("Error", e.what());
    return kExitMalformed;
  }
  return 0;
}
