// Copyright 2026 The conid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conid/rational.hpp"

namespace conid {

/// Exact linear program in the packing form
///
///     maximize  c^T y   subject to  A y <= b,  y >= 0,
///
/// with b >= 0 so the slack basis is feasible from the start. Solved by a
/// dense rational tableau simplex with Bland's pivoting rule, so termination
/// is guaranteed and no tolerances exist.
struct PackingLp {
    std::vector<std::vector<Rational>> a;  ///< rows x columns
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LpSolution {
    bool bounded = true;
    Rational objective;
    std::vector<Rational> primal;  ///< y, one per column
    std::vector<Rational> dual;    ///< one per row; optimal for min b^T w, A^T w >= c, w >= 0
    std::uint64_t pivots = 0;
};

/// Throws Error(invalid_parameter) on shape mismatch or negative b.
LpSolution solve_packing_lp(const PackingLp &lp);

}  // namespace conid
