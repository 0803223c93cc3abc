// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_LP_HPP_
#define FAIRDIV_LP_HPP_

#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// maximize c.x  subject to  A x = b,  x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
};

// Dense two-phase simplex over exact rationals with Bland's rule, so the
// result is deterministic and the method cannot cycle.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace fairdiv

#endif  // FAIRDIV_LP_HPP_
