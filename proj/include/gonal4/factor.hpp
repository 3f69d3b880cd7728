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

#ifndef GONAL4_FACTOR_HPP
#define GONAL4_FACTOR_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gonal4/extfield.hpp"
#include "gonal4/fp.hpp"
#include "gonal4/poly.hpp"
#include "gonal4/rng.hpp"

namespace gonal4 {

/// x^(q) mod f where q = p^m is the order of the coefficient field:
/// m successive p-th powers in the quotient ring.
template <class F>
Poly<F> q_power_mod(const Poly<F>& h, const Poly<F>& f) {
    u64 p = field_characteristic(f.leading());
    int m = field_degree(f.leading());
    Poly<F> r = poly_mod(h, f);
    for (int i = 0; i < m; ++i) r = powmod(r, p, f);
    return r;
}

/// Coefficient-wise p-th root of a polynomial in x^p.
template <class F>
Poly<F> pth_root_poly(const Poly<F>& f) {
    u64 p = field_characteristic(f.leading());
    std::vector<F> cs;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % p == 0) {
            cs.push_back(f[i].pth_root());
        } else if (!f[i].is_zero()) {
            throw std::logic_error("pth_root_poly: polynomial is not in x^p");
        }
    }
    return Poly<F>::from_coeffs(std::move(cs));
}

/// Squarefree decomposition of a monic polynomial in characteristic p.
template <class F>
void squarefree_decompose(const Poly<F>& f, int outer_mult, std::map<int, Poly<F>>& out) {
    u64 p = field_characteristic(f.leading());
    if (f.degree() == 0) return;
    Poly<F> fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root_poly(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly<F> c = gcd_monic(f, fp);
    Poly<F> w = poly_exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly<F> y = gcd_monic(w, c);
        Poly<F> z = poly_exact_div(w, y);
        if (z.degree() > 0) {
            auto it = out.find(i * outer_mult);
            if (it == out.end())
                out.emplace(i * outer_mult, z);
            else
                it->second = it->second * z;
        }
        w = std::move(y);
        c = poly_exact_div(c, w);
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root_poly(c), outer_mult * static_cast<int>(p), out);
}

inline Fp random_field_elem(const Fp& sample, CounterRng& rng) {
    return rng.next_fp(sample.modulus());
}

inline ExtElem random_field_elem(const ExtElem& sample, CounterRng& rng) {
    const ExtField& K = sample.field();
    std::vector<Fp> cs;
    for (int i = 0; i < K.degree(); ++i) cs.push_back(rng.next_fp(K.p()));
    return K.from_poly(Poly<Fp>::from_coeffs(std::move(cs)));
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree g whose
/// irreducible factors all have degree d. Randomness comes from the
/// counter rng, so results are reproducible for a fixed seed.
template <class F>
void equal_degree_split(const Poly<F>& g, int d, CounterRng& rng, std::vector<Poly<F>>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    u64 p = field_characteristic(g.leading());
    int m = field_degree(g.leading());
    const F zero = g.leading().zero_like();
    const F one = g.leading().one_like();
    while (true) {
        std::vector<F> cs;
        for (int i = 0; i < g.degree(); ++i) cs.push_back(random_field_elem(zero, rng));
        Poly<F> r = Poly<F>::from_coeffs(std::move(cs));
        if (r.degree() < 1) continue;
        // r^((q^d - 1)/2) = (prod_{i<md} r^(p^i))^((p-1)/2)
        Poly<F> acc = poly_mod(r, g);
        Poly<F> cur = acc;
        for (int i = 1; i < m * d; ++i) {
            cur = powmod(cur, p, g);
            acc = poly_mod(acc * cur, g);
        }
        Poly<F> s = powmod(acc, (p - 1) / 2, g);
        Poly<F> split = gcd_monic(s - Poly<F>::constant(one), g);
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree_split(split, d, rng, out);
            equal_degree_split(poly_exact_div(g, split), d, rng, out);
            return;
        }
    }
}

template <class F>
struct Factorization {
    F lc;                                       // leading coefficient of the input
    std::vector<std::pair<Poly<F>, int>> factors;  // monic irreducible, with multiplicity

    Poly<F> product() const {
        Poly<F> r = Poly<F>::constant(lc);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) r = r * f;
        return r;
    }
};

/// Full factorization over F_p or F_{p^m}: squarefree decomposition,
/// then distinct-degree and equal-degree splitting. Deterministic for a
/// fixed (input, seed). The zero polynomial is a usage error.
template <class F>
Factorization<F> uni_factor(const Poly<F>& f, u64 seed = 0) {
    if (f.is_zero()) throw std::invalid_argument("uni_factor: zero polynomial");
    CounterRng rng(seed, 0x4544465f73706c74ull);
    Factorization<F> out{f.leading(), {}};
    if (f.degree() == 0) return out;

    std::map<int, Poly<F>> sqfree;
    squarefree_decompose(make_monic(f), 1, sqfree);

    const F one = f.leading().one_like();
    for (auto& [mult, part] : sqfree) {
        // distinct-degree: peel off the product of irreducible factors of
        // each degree d in turn
        Poly<F> rem = part;
        Poly<F> x = Poly<F>::identity_x(one);
        Poly<F> h = poly_mod(x, rem);
        for (int d = 1; rem.degree() >= 2 * d; ++d) {
            h = q_power_mod(h, rem);
            Poly<F> g = gcd_monic(h - x, rem);
            if (g.degree() > 0) {
                std::vector<Poly<F>> pieces;
                equal_degree_split(g, d, rng, pieces);
                for (auto& q : pieces) out.factors.emplace_back(std::move(q), mult);
                rem = poly_exact_div(rem, g);
                h = poly_mod(h, rem);
            }
        }
        if (rem.degree() > 0) out.factors.emplace_back(rem, mult);
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            auto ka = sort_key(a.first[static_cast<std::size_t>(i)]);
            auto kb = sort_key(b.first[static_cast<std::size_t>(i)]);
            if (ka != kb) return ka < kb;
        }
        return a.second < b.second;
    });
    return out;
}

/// Irreducibility over the coefficient field: x^(q^m) = x mod f together
/// with gcd(x^(q^(m/r)) - x, f) = 1 for every prime r | m.
inline bool is_irreducible(const Poly<Fp>& f) {
    int m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    const Fp one = f.leading().one_like();
    Poly<Fp> x = Poly<Fp>::identity_x(one);
    std::vector<int> prime_divs;
    int mm = m;
    for (int r = 2; r * r <= mm; ++r) {
        if (mm % r == 0) {
            prime_divs.push_back(r);
            while (mm % r == 0) mm /= r;
        }
    }
    if (mm > 1) prime_divs.push_back(mm);

    Poly<Fp> h = poly_mod(x, f);
    std::vector<Poly<Fp>> powers(static_cast<std::size_t>(m) + 1, h);
    for (int i = 1; i <= m; ++i) {
        h = q_power_mod(h, f);
        powers[static_cast<std::size_t>(i)] = h;
    }
    if (powers[static_cast<std::size_t>(m)] != poly_mod(x, f)) return false;
    for (int r : prime_divs) {
        if (gcd_monic(powers[static_cast<std::size_t>(m / r)] - x, f).degree() != 0) return false;
    }
    return true;
}

inline ExtField ExtField::with_degree(u64 p, int m) {
    check_field_modulus(p);
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    // x^m + c_{m-1} x^{m-1} + ... + c_0, scanning (c_0, c_1, ...) in
    // lexicographic order; the search space is tiny for the degrees in use
    std::vector<u64> c(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<Fp> cs;
        for (u64 v : c) cs.emplace_back(v, p);
        cs.emplace_back(1, p);
        Poly<Fp> f = Poly<Fp>::from_coeffs(std::move(cs));
        if (f.degree() == m && is_irreducible(f)) return ExtField(std::move(f), false);
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) throw std::logic_error("no irreducible modulus found");
    }
}

/// Roots in the base field, with multiplicities.
template <class F>
std::vector<std::pair<F, int>> roots_in_field(const Poly<F>& f, u64 seed = 0) {
    std::vector<std::pair<F, int>> out;
    if (f.degree() < 1) return out;
    Factorization<F> fac = uni_factor(f, seed);
    for (const auto& [g, m] : fac.factors) {
        if (g.degree() == 1) out.emplace_back(-(g[0] * g[1].inv()), m);
    }
    return out;
}

}  // namespace gonal4

#endif  // GONAL4_FACTOR_HPP
