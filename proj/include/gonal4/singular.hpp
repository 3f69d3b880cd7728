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

#ifndef GONAL4_SINGULAR_HPP
#define GONAL4_SINGULAR_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gonal4/bipoly.hpp"
#include "gonal4/extfield.hpp"
#include "gonal4/factor.hpp"

namespace gonal4 {

struct QuadricPoint {
    u64 u, v;
    friend bool operator==(const QuadricPoint& a, const QuadricPoint& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const QuadricPoint& a, const QuadricPoint& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

/// Result of the exhaustive singular-point sweep: either the form is
/// degenerate (resample), or the complete singular locus was computed and
/// compared against the expected node set.
struct SingularSweep {
    bool resample = false;
    std::string resample_reason;
    bool pass = false;                 // no singular points beyond the expected ones
    std::vector<std::string> extra;    // unexpected singular points, as text witnesses
    std::size_t planned_found = 0;     // expected nodes rediscovered by the sweep
};

namespace detail {

inline Poly<Fp> gcd3(const Poly<Fp>& a, const Poly<Fp>& b, const Poly<Fp>& c) {
    return gcd_monic(gcd_monic(a, b), c);
}

inline Poly<ExtElem> gcd3(const Poly<ExtElem>& a, const Poly<ExtElem>& b, const Poly<ExtElem>& c) {
    return gcd_monic(gcd_monic(a, b), c);
}

inline std::string fp_str(u64 v) { return std::to_string(v); }

inline std::string poly_str(const Poly<Fp>& f, const char* var) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        if (f[static_cast<std::size_t>(i)].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(f[static_cast<std::size_t>(i)].value());
        if (i >= 1) s += std::string("*") + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace detail

/// Finds every singular point of the projective bidegree (4, d2) curve,
/// including the three boundary charts, and reports any point outside the
/// expected list. Points over extension fields are located by passing to
/// F_p[u]/(q(u)) for each irreducible factor q of the u-resultant of the
/// two partials; a nonconstant common divisor there is a singular point
/// with irrational coordinates, which is never planned.
inline SingularSweep singular_locus_complete(const BidegreeForm& form,
                                             const std::vector<QuadricPoint>& planned,
                                             u64 factor_seed = 0) {
    SingularSweep out;
    const u64 p = form.p;
    if (form.is_zero()) {
        out.resample = true;
        out.resample_reason = "zero form";
        return out;
    }

    BidegreeForm fu = form.du(), fv = form.dv();
    Poly<Poly<Fp>> A = as_poly_v_of_u(form);
    Poly<Poly<Fp>> Au = as_poly_v_of_u(fu);
    Poly<Poly<Fp>> Av = as_poly_v_of_u(fv);
    if (Au.is_zero() || Av.is_zero()) {
        out.resample = true;
        out.resample_reason = "a partial derivative vanishes identically";
        return out;
    }

    Poly<Fp> res = resultant(Au, Av);
    if (res.is_zero()) {
        out.resample = true;
        out.resample_reason = "resultant of the partials vanishes identically (non-reduced form)";
        return out;
    }

    std::set<QuadricPoint> planned_set(planned.begin(), planned.end());
    std::set<QuadricPoint> found;

    Factorization<Fp> fac = uni_factor(res, factor_seed);
    for (const auto& [q, mult] : fac.factors) {
        (void)mult;
        if (q.degree() == 1) {
            Fp u0 = -(q[0] * q[1].inv());
            Poly<Fp> a = specialize_u(form, u0);
            Poly<Fp> b = specialize_u(fu, u0);
            Poly<Fp> c = specialize_u(fv, u0);
            if (a.is_zero() && b.is_zero() && c.is_zero()) {
                out.resample = true;
                out.resample_reason = "entire fibre u=" + detail::fp_str(u0.value()) + " is singular";
                return out;
            }
            Poly<Fp> h = detail::gcd3(a, b, c);
            if (h.degree() <= 0) continue;
            Factorization<Fp> hf = uni_factor(h, factor_seed);
            for (const auto& [hq, hm] : hf.factors) {
                (void)hm;
                if (hq.degree() == 1) {
                    Fp v0 = -(hq[0] * hq[1].inv());
                    QuadricPoint pt{u0.value(), v0.value()};
                    found.insert(pt);
                    if (!planned_set.count(pt)) {
                        out.extra.push_back("unexpected singular point (" + detail::fp_str(pt.u) + ", " +
                                            detail::fp_str(pt.v) + ")");
                    }
                } else {
                    out.extra.push_back("singular points at u=" + detail::fp_str(u0.value()) +
                                        " with v of degree " + std::to_string(hq.degree()) +
                                        " over the base field: " + detail::poly_str(hq, "v"));
                }
            }
        } else {
            // rational u-coordinates live in degree-1 factors; here the
            // candidate u lives in F_{p^m}, so any singular point is extra
            ExtField K(q, false);
            ExtElem alpha = K.gen();
            Poly<ExtElem> a = specialize_u(form, alpha);
            Poly<ExtElem> b = specialize_u(fu, alpha);
            Poly<ExtElem> c = specialize_u(fv, alpha);
            if (a.is_zero() && b.is_zero() && c.is_zero()) {
                out.resample = true;
                out.resample_reason = "a nonrational fibre is entirely singular";
                return out;
            }
            Poly<ExtElem> h = detail::gcd3(a, b, c);
            if (h.degree() >= 1) {
                out.extra.push_back("singular point with u of degree " + std::to_string(q.degree()) +
                                    " over the base field: u-minimal polynomial " + detail::poly_str(q, "u") +
                                    ", v-locus of degree " + std::to_string(h.degree()));
            }
        }
    }

    // chart at u = infinity (v finite)
    {
        Poly<Fp> a = form.row_poly(4);   // value on the boundary line
        Poly<Fp> b = form.row_poly(3);   // d/du' there
        if (a.is_zero()) {
            out.resample = true;
            out.resample_reason = "u-degree dropped below 4 (ruling component at infinity)";
            return out;
        }
        Poly<Fp> h = detail::gcd3(a, a.derivative(), b);
        if (h.degree() >= 1)
            out.extra.push_back("singular point at u=infinity, v-locus " + detail::poly_str(h, "v"));
    }
    // chart at v = infinity (u finite)
    {
        Poly<Fp> a = form.col_poly(form.d2);
        Poly<Fp> b = form.col_poly(form.d2 - 1);
        if (a.is_zero()) {
            out.resample = true;
            out.resample_reason = "v-degree dropped (ruling component at infinity)";
            return out;
        }
        Poly<Fp> h = detail::gcd3(a, a.derivative(), b);
        if (h.degree() >= 1)
            out.extra.push_back("singular point at v=infinity, u-locus " + detail::poly_str(h, "u"));
    }
    // corner (u, v) = (infinity, infinity)
    if (form.at(4, form.d2) == 0 && form.at(3, form.d2) == 0 && form.at(4, form.d2 - 1) == 0)
        out.extra.push_back("singular point at (infinity, infinity)");

    for (const QuadricPoint& pt : planned)
        if (found.count(pt)) ++out.planned_found;

    out.pass = out.extra.empty() && out.planned_found == planned_set.size();
    return out;
}

}  // namespace gonal4

#endif  // GONAL4_SINGULAR_HPP
