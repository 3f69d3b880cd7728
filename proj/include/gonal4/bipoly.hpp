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

#ifndef GONAL4_BIPOLY_HPP
#define GONAL4_BIPOLY_HPP

#include <stdexcept>
#include <vector>

#include "gonal4/factor.hpp"
#include "gonal4/fp.hpp"
#include "gonal4/poly.hpp"

namespace gonal4 {

/// Coefficient grid of a bidegree (4, d2) form on the quadric, in the
/// affine chart: coeffs[i][j] multiplies u^i v^j with 0 <= i <= 4 and
/// 0 <= j <= d2. The projective curve is the bihomogenization; the three
/// boundary charts are reached by reversing the rows or columns.
struct BidegreeForm {
    static constexpr i64 d1 = 4;
    u64 p = 0;
    i64 d2 = 0;
    std::vector<u64> coeffs;  // (d1+1) x (d2+1), row-major by u-degree

    BidegreeForm() = default;
    BidegreeForm(u64 p_, i64 d2_) : p(p_), d2(d2_), coeffs(static_cast<std::size_t>(5 * (d2_ + 1)), 0) {}

    u64 at(i64 i, i64 j) const { return coeffs[static_cast<std::size_t>(i * (d2 + 1) + j)]; }
    u64& at(i64 i, i64 j) { return coeffs[static_cast<std::size_t>(i * (d2 + 1) + j)]; }

    bool is_zero() const {
        for (u64 c : coeffs)
            if (c) return false;
        return true;
    }

    /// Row i as a polynomial in v.
    Poly<Fp> row_poly(i64 i) const {
        std::vector<Fp> cs;
        for (i64 j = 0; j <= d2; ++j) cs.emplace_back(at(i, j), p);
        return Poly<Fp>::from_coeffs(std::move(cs));
    }

    /// Column j as a polynomial in u.
    Poly<Fp> col_poly(i64 j) const {
        std::vector<Fp> cs;
        for (i64 i = 0; i <= d1; ++i) cs.emplace_back(at(i, j), p);
        return Poly<Fp>::from_coeffs(std::move(cs));
    }

    /// Partial derivative grids (same storage shape).
    BidegreeForm du() const {
        BidegreeForm r(p, d2);
        for (i64 i = 1; i <= d1; ++i)
            for (i64 j = 0; j <= d2; ++j)
                r.at(i - 1, j) = mulmod(static_cast<u64>(i), at(i, j), p);
        return r;
    }
    BidegreeForm dv() const {
        BidegreeForm r(p, d2);
        for (i64 i = 0; i <= d1; ++i)
            for (i64 j = 1; j <= d2; ++j)
                r.at(i, j - 1) = mulmod(static_cast<u64>(j) % p, at(i, j), p);
        return r;
    }

    u64 eval(u64 u, u64 v) const {
        // Horner in u of Horner-in-v rows
        u64 acc = 0;
        for (i64 i = d1; i >= 0; --i) {
            u64 row = 0;
            for (i64 j = d2; j >= 0; --j) row = addmod(mulmod(row, v, p), at(i, j), p);
            acc = addmod(mulmod(acc, u, p), row, p);
        }
        return acc;
    }
};

inline Fp lift_residue(u64 c, const Fp& sample) { return Fp(c, sample.modulus()); }
inline ExtElem lift_residue(u64 c, const ExtElem& sample) {
    return sample.field().embed(Fp(c, sample.characteristic()));
}

/// Specialize u to a field element (base or extension), leaving a
/// polynomial in v.
template <class F>
Poly<F> specialize_u(const BidegreeForm& f, const F& alpha) {
    std::vector<F> cs;
    for (i64 j = 0; j <= f.d2; ++j) {
        F acc = alpha.zero_like();
        for (i64 i = f.d1; i >= 0; --i) {
            acc = acc * alpha + lift_residue(f.at(i, j), alpha);
        }
        cs.push_back(std::move(acc));
    }
    return Poly<F>::from_coeffs(std::move(cs));
}

/// Specialize v to a base-field value, leaving a polynomial in u.
inline Poly<Fp> specialize_v_poly(const BidegreeForm& f, const Fp& v0) {
    std::vector<Fp> cs;
    for (i64 i = 0; i <= f.d1; ++i) cs.push_back(f.row_poly(i).eval(v0));
    return Poly<Fp>::from_coeffs(std::move(cs));
}

/// The form as a polynomial in v whose coefficients are polynomials in u.
inline Poly<Poly<Fp>> as_poly_v_of_u(const BidegreeForm& f) {
    std::vector<Poly<Fp>> cs;
    for (i64 j = 0; j <= f.d2; ++j) cs.push_back(f.col_poly(j));
    return Poly<Poly<Fp>>::from_coeffs(std::move(cs));
}

/// The form as a polynomial in u whose coefficients are polynomials in v.
inline Poly<Poly<Fp>> as_poly_u_of_v(const BidegreeForm& f) {
    std::vector<Poly<Fp>> cs;
    for (i64 i = 0; i <= f.d1; ++i) cs.push_back(f.row_poly(i));
    return Poly<Poly<Fp>>::from_coeffs(std::move(cs));
}

/// Content of a bivariate polynomial in its outer variable: the monic gcd
/// of the coefficient polynomials.
inline Poly<Fp> outer_content(const Poly<Poly<Fp>>& f) {
    Poly<Fp> g;
    for (const auto& c : f.coeffs()) g = gcd_monic(g, c);
    return g;
}

inline Poly<Poly<Fp>> divide_outer_content(const Poly<Poly<Fp>>& f, const Poly<Fp>& content) {
    std::vector<Poly<Fp>> cs;
    for (const auto& c : f.coeffs()) cs.push_back(c.is_zero() ? c : poly_exact_div(c, content));
    return Poly<Poly<Fp>>::from_coeffs(std::move(cs));
}

/// Gcd in the outer variable over F_p[inner], by a primitive
/// pseudo-remainder sequence. Returns a primitive result (content of the
/// inputs is not multiplied back in).
inline Poly<Poly<Fp>> gcd_outer_primitive(Poly<Poly<Fp>> a, Poly<Poly<Fp>> b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = divide_outer_content(a, outer_content(a));
    b = divide_outer_content(b, outer_content(b));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        Poly<Poly<Fp>> r = pseudo_rem(a, b);
        if (!r.is_zero()) r = divide_outer_content(r, outer_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (!b.is_zero()) return ring_one_like(b);  // coprime
    return a;
}

}  // namespace gonal4

#endif  // GONAL4_BIPOLY_HPP
