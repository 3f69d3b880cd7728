/*
   Copyright 2026 The gonal4 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GONAL4_MATRIX_HPP
#define GONAL4_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gonal4/fp.hpp"

namespace gonal4 {

/// Dense matrix over F_p with raw residues; the hot elimination loops
/// stay on plain integers.
struct MatrixFp {
    std::size_t rows = 0, cols = 0;
    u64 p = 0;
    std::vector<u64> a;  // row-major, length rows*cols

    MatrixFp() = default;
    MatrixFp(std::size_t r, std::size_t c, u64 mod) : rows(r), cols(c), p(mod), a(r * c, 0) {}

    u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<u64>> kernel;  // basis of the right kernel
};

/// Gaussian elimination with a fixed pivot rule: columns are scanned left
/// to right, and within a column the first unused row with a nonzero
/// entry is the pivot. Returns the rank and a kernel basis with
/// rank + dim(kernel) = cols.
inline RankKernel rank_and_kernel(const MatrixFp& M) {
    const std::size_t R = M.rows, C = M.cols;
    const u64 p = M.p;
    std::vector<u64> w = M.a;
    std::vector<std::size_t> pivot_col;  // per pivot row (in elimination order)
    std::vector<bool> is_pivot_col(C, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t pr = R;
        for (std::size_t i = r; i < R; ++i) {
            if (w[i * C + c] != 0) { pr = i; break; }
        }
        if (pr == R) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(w[pr * C + j], w[r * C + j]);
        }
        u64 inv = invmod(w[r * C + c], p);
        for (std::size_t j = c; j < C; ++j) w[r * C + j] = mulmod(w[r * C + j], inv, p);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            u64 f = w[i * C + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < C; ++j)
                w[i * C + j] = submod(w[i * C + j], mulmod(f, w[r * C + j], p), p);
        }
        pivot_col.push_back(c);
        is_pivot_col[c] = true;
        ++r;
    }

    RankKernel out;
    out.rank = r;
    for (std::size_t c = 0; c < C; ++c) {
        if (is_pivot_col[c]) continue;
        std::vector<u64> v(C, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            u64 val = w[i * C + c];
            if (val != 0) v[pivot_col[i]] = p - val;
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

/// Checks M * v = 0 over F_p.
inline bool annihilates(const MatrixFp& M, const std::vector<u64>& v) {
    if (v.size() != M.cols) return false;
    for (std::size_t i = 0; i < M.rows; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < M.cols; ++j) {
            acc += static_cast<u128>(M.at(i, j)) * v[j] % M.p;
            if ((j & 63) == 63) acc %= M.p;
        }
        if (acc % M.p != 0) return false;
    }
    return true;
}

}  // namespace gonal4

#endif  // GONAL4_MATRIX_HPP
