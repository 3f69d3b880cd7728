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

#ifndef GONAL4_IRREDUCIBLE_HPP
#define GONAL4_IRREDUCIBLE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gonal4/bipoly.hpp"
#include "gonal4/factor.hpp"
#include "gonal4/rng.hpp"
#include "gonal4/singular.hpp"

namespace gonal4 {

/// Sufficient irreducibility certificate for a bidegree (4, d2) divisor.
///
/// Stages: (0) both partial degrees must be full, otherwise a ruling line
/// at infinity splits off; (1) content checks rule out factors pure in
/// one variable; (2) a specialization v = v0 with an irreducible quartic
/// in u rules out every factor of positive u-degree; (3) if no such v0
/// shows up within the budget, an exact search for factors of u-degree 1
/// or 2 runs instead (local factorization at a squarefree fibre, lifted
/// coefficient by coefficient, followed by trial division). The fallback
/// either exhibits a factor or proves there is none.
struct IrreducibilityCertificate {
    enum class Tag { Certified, CertifiedByFallback, Reducible, Inconclusive } tag;
    std::string witness;

    bool passed() const { return tag == Tag::Certified || tag == Tag::CertifiedByFallback; }
    const char* tag_name() const {
        switch (tag) {
            case Tag::Certified: return "certified";
            case Tag::CertifiedByFallback: return "certified-by-fallback";
            case Tag::Reducible: return "reducible";
            default: return "inconclusive";
        }
    }
};

namespace detail {

inline Poly<Fp> series_trunc(const Poly<Fp>& a, i64 K) {
    if (a.degree() < K) return a;
    std::vector<Fp> cs(a.coeffs().begin(), a.coeffs().begin() + K);
    return Poly<Fp>::from_coeffs(std::move(cs));
}

/// Substitute v -> v0 + w in a polynomial in v.
inline Poly<Fp> shift_var(const Poly<Fp>& a, const Fp& v0) {
    Poly<Fp> result;
    Poly<Fp> shift = Poly<Fp>::from_coeffs({v0, v0.one_like()});  // v0 + w
    for (int i = a.degree(); i >= 0; --i)
        result = result * shift + Poly<Fp>::constant(a[static_cast<std::size_t>(i)]);
    return result;
}

/// Monic polynomial in U with truncated power-series coefficients in w.
struct USeries {
    std::vector<Poly<Fp>> c;  // by U-power
    i64 K = 0;                // truncation order

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

inline USeries useries_mul(const USeries& a, const USeries& b) {
    USeries r;
    r.K = a.K;
    r.c.assign(a.c.size() + b.c.size() - 1, Poly<Fp>());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = series_trunc(r.c[i + j] + a.c[i] * b.c[j], r.K);
    return r;
}

inline Poly<Fp> useries_coeff_of_w(const USeries& a, i64 k, u64 p) {
    // polynomial in U assembled from the w^k coefficients
    std::vector<Fp> cs;
    for (const auto& s : a.c) cs.push_back(s.coeff_or_zero(static_cast<std::size_t>(k), Fp(0, p)));
    return Poly<Fp>::from_coeffs(std::move(cs));
}

/// Linear Newton lift of a coprime factorization F = G*H mod w to
/// precision w^K. F, G, H are monic in U; S*g0 + T*h0 = 1 at w = 0.
inline void hensel_lift_pair(const USeries& F, USeries& G, USeries& H, u64 p) {
    Poly<Fp> g0 = useries_coeff_of_w(G, 0, p);
    Poly<Fp> h0 = useries_coeff_of_w(H, 0, p);
    ExtGcd<Fp> e = ext_gcd(g0, h0);
    if (e.g.degree() != 0) throw std::logic_error("hensel_lift_pair: local factors not coprime");
    Poly<Fp> S = e.s, T = e.t;  // S*g0 + T*h0 = 1
    for (i64 k = 1; k < F.K; ++k) {
        USeries GH = useries_mul(G, H);
        // defect at order k
        Poly<Fp> err = useries_coeff_of_w(F, k, p) - useries_coeff_of_w(GH, k, p);
        if (err.is_zero()) continue;
        Poly<Fp> dG = poly_mod(T * err, g0);
        Poly<Fp> dH = poly_mod(S * err, h0);
        for (int i = 0; i <= dG.degree(); ++i) {
            Poly<Fp> add = Poly<Fp>::monomial(dG[static_cast<std::size_t>(i)], static_cast<std::size_t>(k));
            G.c[static_cast<std::size_t>(i)] = series_trunc(G.c[static_cast<std::size_t>(i)] + add, F.K);
        }
        for (int i = 0; i <= dH.degree(); ++i) {
            Poly<Fp> add = Poly<Fp>::monomial(dH[static_cast<std::size_t>(i)], static_cast<std::size_t>(k));
            H.c[static_cast<std::size_t>(i)] = series_trunc(H.c[static_cast<std::size_t>(i)] + add, F.K);
        }
    }
}

inline USeries useries_from_local(const Poly<Fp>& g, i64 K) {
    USeries r;
    r.K = K;
    for (int i = 0; i <= g.degree(); ++i) r.c.push_back(Poly<Fp>::constant(g[static_cast<std::size_t>(i)]));
    return r;
}

}  // namespace detail

inline IrreducibilityCertificate irreducibility_certificate(const BidegreeForm& form, u64 seed,
                                                            int budget = 64) {
    using Tag = IrreducibilityCertificate::Tag;
    const u64 p = form.p;
    if (form.is_zero()) throw std::invalid_argument("irreducibility_certificate: zero form");

    // stage 0: full bidegree, else a ruling line splits off at infinity
    Poly<Fp> top_row = form.row_poly(4);
    if (top_row.is_zero())
        return {Tag::Reducible, "u-degree below 4: the first-ruling line at infinity is a component"};
    if (form.col_poly(form.d2).is_zero())
        return {Tag::Reducible, "v-degree below " + std::to_string(form.d2) +
                                    ": the second-ruling line at infinity is a component"};

    // stage 1: content in either variable
    {
        Poly<Fp> g;
        for (i64 i = 0; i <= form.d1; ++i) g = gcd_monic(g, form.row_poly(i));
        if (g.degree() >= 1)
            return {Tag::Reducible, "factor independent of u: " + detail::poly_str(g, "v")};
        Poly<Fp> h;
        for (i64 j = 0; j <= form.d2; ++j) h = gcd_monic(h, form.col_poly(j));
        if (h.degree() >= 1)
            return {Tag::Reducible, "factor independent of v: " + detail::poly_str(h, "u")};
    }

    // stage 2: hunt for an irreducible quartic specialization
    CounterRng rng(seed, 0x6972726564ull);
    for (int trial = 0; trial < budget; ++trial) {
        Fp v0 = rng.next_fp(p);
        if (top_row.eval(v0).is_zero()) continue;
        Poly<Fp> q = specialize_v_poly(form, v0);
        if (q.degree() != 4) continue;
        if (is_irreducible(q))
            return {Tag::Certified,
                    "irreducible degree-4 specialization at v=" + std::to_string(v0.value())};
    }

    // stage 2b: a repeated factor shows up as a u-gcd with the u-derivative
    {
        Poly<Poly<Fp>> f_u_of_v = as_poly_u_of_v(form);
        Poly<Poly<Fp>> fu = as_poly_u_of_v(form.du());
        Poly<Poly<Fp>> g = gcd_outer_primitive(f_u_of_v, fu);
        if (g.degree() >= 1) return {Tag::Reducible, "repeated factor of positive u-degree"};
    }

    // stage 3: exact low-u-degree factor search by local lifting
    for (int trial = 0; trial < budget; ++trial) {
        Fp v0 = rng.next_fp(p);
        if (top_row.eval(v0).is_zero()) continue;
        Poly<Fp> q = specialize_v_poly(form, v0);
        if (q.degree() != 4) continue;
        if (gcd_monic(q, q.derivative()).degree() != 0) continue;  // need a squarefree fibre

        Factorization<Fp> local = uni_factor(q, seed);
        std::vector<Poly<Fp>> locals;
        for (const auto& [lf, lm] : local.factors)
            for (int i = 0; i < lm; ++i) locals.push_back(lf);
        if (locals.size() == 1)
            return {Tag::CertifiedByFallback,
                    "irreducible squarefree specialization at v=" + std::to_string(v0.value())};

        // monicize in U = r4*u and shift v -> v0 + w
        Poly<Fp> r4 = top_row;
        i64 D = 0;
        std::vector<Poly<Fp>> fcoef;  // coefficients of F(U, w), monic degree 4
        for (i64 i = 0; i <= 4; ++i) {
            Poly<Fp> ci = form.row_poly(i);
            Poly<Fp> scaled = i == 4 ? Poly<Fp>::constant(Fp(1, p))
                                     : ci * ring_pow(r4, static_cast<u64>(3 - i));
            scaled = detail::shift_var(scaled, v0);
            D = std::max<i64>(D, scaled.degree());
            fcoef.push_back(std::move(scaled));
        }
        // lifted monic-factor coefficients have degree at most D; clearing
        // denominators multiplies by r4^(1+i) with i <= 2
        i64 K = D + 3 * std::max<i64>(r4.degree(), 0) + 2;
        detail::USeries F;
        F.K = K;
        for (auto& c : fcoef) F.c.push_back(detail::series_trunc(c, K));

        // lift all local factors: peel them off the front one at a time
        std::vector<detail::USeries> lifted;
        {
            detail::USeries rest = F;
            for (std::size_t i = 0; i + 1 < locals.size(); ++i) {
                detail::USeries G = detail::useries_from_local(make_monic(locals[i]), K);
                Poly<Fp> cof = poly_exact_div(detail::useries_coeff_of_w(rest, 0, p), make_monic(locals[i]));
                detail::USeries H = detail::useries_from_local(cof, K);
                detail::hensel_lift_pair(rest, G, H, p);
                lifted.push_back(G);
                rest = H;
            }
            lifted.push_back(rest);
        }

        // try subsets of total u-degree 1 or 2
        std::size_t n = locals.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            int deg = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) deg += locals[i].degree();
            if (deg != 1 && deg != 2) continue;
            detail::USeries prod;
            prod.K = K;
            prod.c = {Poly<Fp>::constant(Fp(1, p))};
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) prod = detail::useries_mul(prod, lifted[i]);
            // multiply back the leading coefficient and read off polynomials
            Poly<Fp> r4w = detail::series_trunc(detail::shift_var(r4, v0), K);
            std::vector<Poly<Fp>> cand_coeffs;
            for (auto& s : prod.c) cand_coeffs.push_back(detail::series_trunc(s * r4w, K));
            // candidate is in (U, w) coordinates with U = r4*u: undo both
            // substitutions: coefficient of U^i picks up r4^i
            std::vector<Poly<Fp>> g_coeffs;
            for (std::size_t i = 0; i < cand_coeffs.size(); ++i) {
                Poly<Fp> ci = cand_coeffs[i] * ring_pow(r4w, static_cast<u64>(i));
                g_coeffs.push_back(detail::series_trunc(ci, K));
            }
            // the true factor has polynomial coefficients of degree < K;
            // unshift w -> v - v0 and take the primitive part in u
            std::vector<Poly<Fp>> unshifted;
            for (auto& c : g_coeffs) unshifted.push_back(detail::shift_var(c, -v0));
            Poly<Poly<Fp>> cand = Poly<Poly<Fp>>::from_coeffs(std::move(unshifted));
            if (cand.is_zero() || cand.degree() < 1) continue;
            cand = divide_outer_content(cand, outer_content(cand));
            Poly<Poly<Fp>> f_u_of_v = as_poly_u_of_v(form);
            if (cand.degree() < 1 || cand.degree() > 3) continue;
            Poly<Poly<Fp>> rem = pseudo_rem(f_u_of_v, cand);
            if (rem.is_zero())
                return {Tag::Reducible, "factor of u-degree " + std::to_string(cand.degree()) +
                                            " found by lifting at v=" + std::to_string(v0.value())};
        }
        return {Tag::CertifiedByFallback,
                "no factor of u-degree 1 or 2 exists (exhaustive lift at v=" +
                    std::to_string(v0.value()) + ")"};
    }
    return {Tag::Inconclusive, "no usable specialization found within the trial budget"};
}

}  // namespace gonal4

#endif  // GONAL4_IRREDUCIBLE_HPP
