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

#include "conid/lp.hpp"

#include "conid/error.hpp"

namespace conid {

LpSolution solve_packing_lp(const PackingLp &lp) {
    const std::size_t rows = lp.a.size();
    const std::size_t cols = lp.c.size();
    if (lp.b.size() != rows) {
        throw Error(ErrorCode::invalid_parameter, "LP: b has wrong length");
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (lp.a[i].size() != cols) {
            throw Error(ErrorCode::invalid_parameter, "LP: ragged constraint matrix");
        }
        if (sgn(lp.b[i]) < 0) {
            throw Error(ErrorCode::invalid_parameter, "LP: right-hand side must be nonnegative");
        }
    }

    // Tableau columns: structural 0..cols-1, slacks cols..cols+rows-1, rhs last.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            t[i][j] = lp.a[i][j];
        }
        t[i][cols + i] = 1;
        t[i][width - 1] = lp.b[i];
    }
    // Reduced costs: z_j - c_j (optimal when all >= 0).
    std::vector<Rational> z(width, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
        z[j] = -lp.c[j];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        basis[i] = cols + i;
    }

    LpSolution sol;
    while (true) {
        // Bland: lowest-index improving column.
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (sgn(z[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        // Ratio test, ties broken by lowest basic variable index.
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (sgn(t[i][enter]) > 0) {
                Rational ratio = t[i][width - 1] / t[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave == rows) {
            sol.bounded = false;
            return sol;
        }
        Rational pivot = t[leave][enter];
        for (auto &v : t[leave]) {
            v /= pivot;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != leave && sgn(t[i][enter]) != 0) {
                Rational f = t[i][enter];
                for (std::size_t j = 0; j < width; ++j) {
                    if (sgn(t[leave][j]) != 0) {
                        t[i][j] -= f * t[leave][j];
                    }
                }
            }
        }
        if (sgn(z[enter]) != 0) {
            Rational f = z[enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(t[leave][j]) != 0) {
                    z[j] -= f * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.objective = z[width - 1];
    sol.primal.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) {
            sol.primal[basis[i]] = t[i][width - 1];
        }
    }
    sol.dual.assign(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        sol.dual[i] = z[cols + i];
    }
    return sol;
}

}  // namespace conid
