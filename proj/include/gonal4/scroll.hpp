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

#ifndef GONAL4_SCROLL_HPP
#define GONAL4_SCROLL_HPP

#include <stdexcept>

#include "gonal4/rational.hpp"

namespace gonal4 {

/// Splitting type of a rank-3 rational normal scroll P(O(a)+O(b)+O(c)),
/// kept nondecreasing. For a scroll attached to a genus-g curve,
/// a + b + c = g - 3.
struct ScrollType {
    i64 a, b, c;

    ScrollType(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_) {
        if (a < 0 || a > b || b > c) throw std::invalid_argument("scroll type needs 0 <= a <= b <= c");
    }

    i64 sum() const { return a + b + c; }

    friend bool operator==(const ScrollType& x, const ScrollType& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// h^0 of O(k) on the scroll, by enumerating the monomials of degree k in
/// the three rulings: each u^i v^j w^l contributes i*a + j*b + l*c + 1.
inline i64 h0_twist(const ScrollType& s, i64 k) {
    if (k < 0) throw std::out_of_range("h0_twist: k must be >= 0");
    i64 total = 0;
    for (i64 i = 0; i <= k; ++i)
        for (i64 j = 0; i + j <= k; ++j) {
            i64 l = k - i - j;
            total += i * s.a + j * s.b + l * s.c + 1;
        }
    return total;
}

/// Projective dimension of the space of quadrics through the canonical
/// curve but not through its scroll: h^0(O_V(2)) - 3(g-1) - 1 = g - 4.
inline i64 quadric_space_dim(i64 g) {
    if (g < 10) throw std::domain_error("quadric_space_dim: g must be >= 10");
    return g - 4;
}

struct MinSurfaceBound {
    i64 bound;           // ceil((3g-8)/2)
    Rat pencil_degree;   // (3g-7)/2, integral only for odd g
    bool is_pencil_case; // uniqueness can fail only at this exact degree
};

/// Degree bound for the minimum-degree conic-ruled surface through the
/// canonical curve, and the degree at which it degenerates to a pencil.
inline MinSurfaceBound min_surface_degree_bound(i64 g) {
    Rat pencil(3 * g - 7, 2);
    return {ceil_div(3 * g - 8, 2), pencil, (3 * g - 7) % 2 == 0};
}

/// Intersection degree of two multisecant subschemes meeting properly in
/// a scroll: m1*deg2 + m2*deg1 - m1*m2*degW.
inline i64 intersection_formula(i64 m1, i64 deg1, i64 m2, i64 deg2, i64 deg_w) {
    return m1 * deg2 + m2 * deg1 - m1 * m2 * deg_w;
}

/// Splitting of the scroll spanned by the conic embedding of F_t with
/// parameter lambda: (lambda-2-2t, lambda-2-t, lambda-2).
inline ScrollType standard_scroll_splitting(i64 lambda, i64 t) {
    if (lambda - 2 - 2 * t < 0)
        throw std::domain_error("standard_scroll_splitting: requires lambda - 2 - 2t >= 0");
    return ScrollType(lambda - 2 - 2 * t, lambda - 2 - t, lambda - 2);
}

/// Dimension of the family of rank-2 subscrolls of minimum degree.
inline int ruled_subsurface_family_dim(const ScrollType& s) {
    if (s.a == s.b && s.b == s.c) return 2;
    if (s.a < s.b && s.b == s.c) return 1;
    return 0;  // b < c
}

/// Degree of the minimum conic-ruled surface: g + lambda - t - 5, which
/// also equals 4(lambda-t-2) - delta.
inline i64 deg_min_surface(i64 g, i64 lambda, i64 t) {
    i64 d = g + lambda - t - 5;
    i64 delta = 3 * (lambda - t - 1) - g;
    if (d != 4 * (lambda - t - 2) - delta)
        throw std::logic_error("deg_min_surface: identity violated");
    return d;
}

}  // namespace gonal4

#endif  // GONAL4_SCROLL_HPP
