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

#ifndef LINDPROG_JSON_IO_HPP_
#define LINDPROG_JSON_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "lindprog/dynamics.hpp"

namespace lindprog {

// Matrices are flat row-major lists of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j, Index rows,
                               Index cols, const std::string &field);

// Lindbladian schema:
// {"dim": d, "hamiltonian": [[re,im],...], "jumps": [{"rate": r,
//  "op": [[re,im],...]}], "initial_state": [[re,im],...] (optional)}
struct LindbladianSpec {
  Lindbladian lindbladian;
  std::optional<ComplexMatrix> initial_state;
};

LindbladianSpec lindbladian_from_json(const nlohmann::json &j);
LindbladianSpec load_lindbladian_file(const std::string &path);
nlohmann::json lindbladian_to_json(const Lindbladian &lin);

}  // namespace lindprog

#endif  // LINDPROG_JSON_IO_HPP_
