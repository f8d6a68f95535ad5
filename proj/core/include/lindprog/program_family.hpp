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

#ifndef LINDPROG_PROGRAM_FAMILY_HPP_
#define LINDPROG_PROGRAM_FAMILY_HPP_

#include <functional>
#include <string>
#include <utility>

#include "lindprog/matcore.hpp"

namespace lindprog {

// One-parameter analytic family t >= 0 -> density matrix on the program
// space; evaluators are built from exp/trig/polynomial closed forms.
struct ProgramStateFamily {
  Index dim_p = 0;
  std::string label;
  std::function<ComplexMatrix(double)> evaluator;

  ComplexMatrix operator()(double t) const { return evaluator(t); }
};

inline ProgramStateFamily constant_program(ComplexMatrix state,
                                           std::string label = "constant") {
  ProgramStateFamily f;
  f.dim_p = state.rows();
  f.label = std::move(label);
  f.evaluator = [s = std::move(state)](double) { return s; };
  return f;
}

}  // namespace lindprog

#endif  // LINDPROG_PROGRAM_FAMILY_HPP_
