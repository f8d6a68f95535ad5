// Copyright 2026 The lindprog developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of this license at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lindprog/json_io.hpp"

#include <fstream>

namespace lindprog {

using nlohmann::json;

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

ComplexMatrix matrix_from_json(const json &j, Index rows, Index cols,
                               const std::string &field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols)
    throw std::invalid_argument("field '" + field + "': expected " +
                                std::to_string(rows * cols) +
                                " [re, im] entries");
  ComplexMatrix m(rows, cols);
  Index idx = 0;
  for (const auto &e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw std::invalid_argument("field '" + field +
                                  "': entries must be [re, im] pairs");
    m(idx / cols, idx % cols) =
        Complex(e[0].get<double>(), e[1].get<double>());
    ++idx;
  }
  return m;
}

LindbladianSpec lindbladian_from_json(const json &j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("field 'dim': required integer");
  Index dim = j["dim"].get<Index>();
  if (dim < 1) throw std::invalid_argument("field 'dim': must be >= 1");

  ComplexMatrix h = czeros(dim, dim);
  if (j.contains("hamiltonian"))
    h = matrix_from_json(j["hamiltonian"], dim, dim, "hamiltonian");

  std::vector<Lindbladian::Jump> jumps;
  if (j.contains("jumps")) {
    if (!j["jumps"].is_array())
      throw std::invalid_argument("field 'jumps': expected array");
    int idx = 0;
    for (const auto &e : j["jumps"]) {
      std::string where = "jumps[" + std::to_string(idx++) + "]";
      if (!e.contains("rate") || !e["rate"].is_number())
        throw std::invalid_argument(where + ".rate: required number");
      if (!e.contains("op"))
        throw std::invalid_argument(where + ".op: required matrix");
      jumps.push_back({e["rate"].get<double>(),
                       matrix_from_json(e["op"], dim, dim, where + ".op")});
    }
  }

  LindbladianSpec spec;
  spec.lindbladian = make_lindbladian(dim, h, std::move(jumps));
  if (j.contains("initial_state")) {
    spec.initial_state =
        matrix_from_json(j["initial_state"], dim, dim, "initial_state");
  }
  return spec;
}

LindbladianSpec load_lindbladian_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
  return lindbladian_from_json(j);
}

nlohmann::json lindbladian_to_json(const Lindbladian &lin) {
  json out;
  out["dim"] = lin.dim;
  out["hamiltonian"] = matrix_to_json(lin.hamiltonian);
  out["jumps"] = json::array();
  for (const auto &jump : lin.jumps)
    out["jumps"].push_back(
        {{"rate", jump.rate}, {"op", matrix_to_json(jump.op)}});
  return out;
}

}  // namespace lindprog
