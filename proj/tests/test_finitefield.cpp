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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "gonal4/extfield.hpp"
#include "gonal4/factor.hpp"
#include "gonal4/fp.hpp"
#include "gonal4/matrix.hpp"
#include "gonal4/poly.hpp"
#include "gonal4/rng.hpp"

using namespace gonal4;

namespace {

Poly<Fp> poly_from(std::initializer_list<i64> coeffs, u64 p) {
    std::vector<Fp> cs;
    for (i64 c : coeffs) cs.push_back(Fp::from_int(c, p));
    return Poly<Fp>::from_coeffs(std::move(cs));
}

Poly<Fp> random_poly(int deg, u64 p, CounterRng& rng, bool monic = false) {
    std::vector<Fp> cs;
    for (int i = 0; i < deg; ++i) cs.emplace_back(rng.next_below(p), p);
    cs.emplace_back(monic ? 1 : 1 + rng.next_below(p - 1), p);
    return Poly<Fp>::from_coeffs(std::move(cs));
}

// Independent oracle: the resultant as the determinant of the Sylvester
// matrix, computed by plain Gaussian elimination over F_p.
u64 sylvester_resultant(const Poly<Fp>& a, const Poly<Fp>& b, u64 p) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester oracle: zero input");
    if (m + n == 0) return 1;
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<u64> w(size * size, 0);
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) w[static_cast<std::size_t>(row) * size + static_cast<std::size_t>(row + k)] =
            a[static_cast<std::size_t>(m - k)].value();
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            w[static_cast<std::size_t>(n + row) * size + static_cast<std::size_t>(row + k)] =
                b[static_cast<std::size_t>(n - k)].value();
    u64 det = 1;
    for (std::size_t col = 0, piv = 0; col < size && piv < size; ++col) {
        std::size_t sel = size;
        for (std::size_t i = piv; i < size; ++i)
            if (w[i * size + col] != 0) { sel = i; break; }
        if (sel == size) return 0;
        if (sel != piv) {
            for (std::size_t j = 0; j < size; ++j) std::swap(w[sel * size + j], w[piv * size + j]);
            det = p - det;
            if (det == p) det = 0;
        }
        u64 d = w[piv * size + col];
        det = mulmod(det, d, p);
        u64 inv = invmod(d, p);
        for (std::size_t i = piv + 1; i < size; ++i) {
            u64 f = mulmod(w[i * size + col], inv, p);
            if (f == 0) continue;
            for (std::size_t j = col; j < size; ++j)
                w[i * size + j] = submod(w[i * size + j], mulmod(f, w[piv * size + j], p), p);
        }
        ++piv;
    }
    return det;
}

}  // namespace

TEST_CASE("prime field arithmetic identities") {
    check_field_modulus(10007);
    REQUIRE_THROWS_AS(check_field_modulus(4), std::invalid_argument);
    REQUIRE_THROWS_AS(check_field_modulus(3), std::invalid_argument);
    REQUIRE_THROWS_AS(check_field_modulus(10006), std::invalid_argument);

    CounterRng rng(7);
    const u64 p = 10007;
    for (int i = 0; i < 200; ++i) {
        Fp a = rng.next_fp(p), b = rng.next_fp(p), c = rng.next_fp(p);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == Fp(0, p));
        if (!a.is_zero()) REQUIRE(a * a.inv() == Fp(1, p));
    }
    REQUIRE(Fp::from_int(-3, 7) == Fp(4, 7));
    REQUIRE_THROWS_AS(Fp(1, 7) + Fp(1, 11), std::invalid_argument);
}

TEST_CASE("polynomial gcd basics") {
    const u64 p = 7;
    Poly<Fp> f = poly_from({-1, 0, 1}, p);  // x^2 - 1
    Poly<Fp> g = poly_from({-1, 1}, p);     // x - 1
    REQUIRE(gcd_monic(f, g) == g);

    // gcd with zero returns the monic version of the other argument
    Poly<Fp> h = poly_from({2, 4}, p);
    REQUIRE(gcd_monic(h, Poly<Fp>()) == make_monic(h));
    REQUIRE(gcd_monic(Poly<Fp>(), Poly<Fp>()).is_zero());
}

TEST_CASE("gcd of random coprime cubics is 1") {
    const u64 p = 10007;
    CounterRng rng(11);
    int done = 0;
    while (done < 20) {
        Poly<Fp> f = random_poly(3, p, rng);
        Poly<Fp> g = random_poly(3, p, rng);
        // brute-force root disjointness check in the base field
        std::set<u64> roots_f;
        bool shared_root = false;
        for (const auto& [r, m] : roots_in_field(f)) roots_f.insert(r.value());
        for (const auto& [r, m] : roots_in_field(g))
            if (roots_f.count(r.value())) shared_root = true;
        u64 res = sylvester_resultant(f, g, p);
        if (shared_root || res == 0) continue;  // not coprime, resample
        REQUIRE(gcd_monic(f, g).degree() == 0);
        REQUIRE(resultant(f, g).value() != 0);
        ++done;
    }
}

TEST_CASE("gcd divides both inputs") {
    const u64 p = 101;
    CounterRng rng(13);
    for (int i = 0; i < 50; ++i) {
        Poly<Fp> a = random_poly(static_cast<int>(rng.next_below(6)), p, rng);
        Poly<Fp> b = random_poly(static_cast<int>(rng.next_below(6)), p, rng);
        Poly<Fp> c = random_poly(static_cast<int>(rng.next_below(4)), p, rng);
        a = a * c;
        b = b * c;  // force a common factor
        Poly<Fp> g = gcd_monic(a, b);
        REQUIRE(divmod(a, g).r.is_zero());
        REQUIRE(divmod(b, g).r.is_zero());
    }
}

TEST_CASE("factorization: x^2 + 1 is irreducible over F_7") {
    const u64 p = 7;
    Poly<Fp> f = poly_from({1, 0, 1}, p);
    // exhaustive root check: -1 is not a square mod 7
    for (u64 x = 0; x < p; ++x) REQUIRE(!f.eval(Fp(x, p)).is_zero());
    Factorization<Fp> fac = uni_factor(f);
    REQUIRE(fac.factors.size() == 1);
    REQUIRE(fac.factors[0].first.degree() == 2);
    REQUIRE(fac.factors[0].second == 1);
    REQUIRE(is_irreducible(f));
}

TEST_CASE("factorization with multiplicities") {
    const u64 p = 10007;
    Poly<Fp> f = poly_from({-2, 1}, p);  // x - 2
    Poly<Fp> g = poly_from({-3, 1}, p);  // x - 3
    Poly<Fp> prod = f * f * g;
    Factorization<Fp> fac = uni_factor(prod);
    REQUIRE(fac.factors.size() == 2);
    auto find_mult = [&](const Poly<Fp>& q) {
        for (const auto& [fq, m] : fac.factors)
            if (fq == q) return m;
        return -1;
    };
    REQUIRE(find_mult(f) == 2);
    REQUIRE(find_mult(g) == 1);
    REQUIRE(fac.product() == prod);
    REQUIRE_THROWS_AS(uni_factor(Poly<Fp>()), std::invalid_argument);
}

TEST_CASE("factorization reproduces random squarefree polynomials") {
    const u64 p = 10007;
    CounterRng rng(17);
    int done = 0;
    while (done < 5) {
        Poly<Fp> f = random_poly(12, p, rng);
        if (gcd_monic(f, f.derivative()).degree() != 0) continue;
        Factorization<Fp> fac = uni_factor(f, 99);
        REQUIRE(fac.product() == f);
        for (const auto& [q, m] : fac.factors) {
            REQUIRE(m == 1);
            // irreducibility oracle: x^(p^d) = x mod q and no smaller level
            REQUIRE(is_irreducible(q));
        }
        // determinism for a fixed seed
        Factorization<Fp> again = uni_factor(f, 99);
        REQUIRE(again.factors.size() == fac.factors.size());
        for (std::size_t i = 0; i < fac.factors.size(); ++i)
            REQUIRE(again.factors[i].first == fac.factors[i].first);
        ++done;
    }
}

TEST_CASE("resultant matches the Sylvester determinant") {
    const u64 p = 10007;
    CounterRng rng(23);
    for (int i = 0; i < 60; ++i) {
        Poly<Fp> a = random_poly(1 + static_cast<int>(rng.next_below(5)), p, rng);
        Poly<Fp> b = random_poly(1 + static_cast<int>(rng.next_below(5)), p, rng);
        REQUIRE(resultant(a, b).value() == sylvester_resultant(a, b, p));
    }
    // constant cases
    Poly<Fp> c = poly_from({5}, p);
    Poly<Fp> a = random_poly(3, p, rng);
    REQUIRE(resultant(a, c).value() == Fp(5, p).pow(3).value());
}

TEST_CASE("resultant antisymmetry and multiplicativity") {
    const u64 p = 101;
    CounterRng rng(29);
    for (int i = 0; i < 40; ++i) {
        Poly<Fp> a = random_poly(1 + static_cast<int>(rng.next_below(4)), p, rng);
        Poly<Fp> b = random_poly(1 + static_cast<int>(rng.next_below(4)), p, rng);
        Poly<Fp> c = random_poly(1 + static_cast<int>(rng.next_below(3)), p, rng);
        Fp rab = resultant(a, b);
        Fp rba = resultant(b, a);
        Fp sign = Fp::from_int((a.degree() * b.degree()) % 2 == 0 ? 1 : -1, p);
        REQUIRE(rab == sign * rba);
        REQUIRE(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("bivariate resultant in the outer variable") {
    const u64 p = 10007;
    auto upoly = [&](std::initializer_list<i64> cs) { return poly_from(cs, p); };
    // v - u and v - 2u as polynomials in v over F_p[u]
    Poly<Poly<Fp>> a = Poly<Poly<Fp>>::from_coeffs({upoly({0, -1}), upoly({1})});
    Poly<Poly<Fp>> b = Poly<Poly<Fp>>::from_coeffs({upoly({0, -2}), upoly({1})});
    Poly<Fp> r = resultant(a, b);
    REQUIRE(r.degree() == 1);
    REQUIRE((r == upoly({0, 1}) || r == upoly({0, -1})));

    REQUIRE(resultant(a, a).is_zero());

    // degree bound from the Sylvester dimensions: product of four lines
    Poly<Poly<Fp>> f = a;
    for (i64 k : {2, 3, 4}) {
        Poly<Poly<Fp>> lin = Poly<Poly<Fp>>::from_coeffs({upoly({0, -k}), upoly({1})});
        f = f * lin;
    }
    // partials with respect to each variable
    Poly<Poly<Fp>> fv = f.derivative();
    std::vector<Poly<Fp>> du_coeffs;
    for (const auto& cu : f.coeffs()) du_coeffs.push_back(cu.derivative());
    Poly<Poly<Fp>> fu = Poly<Poly<Fp>>::from_coeffs(std::move(du_coeffs));
    Poly<Fp> res = resultant(fu, fv);
    i64 bound = 0;
    for (const auto& cu : fu.coeffs()) bound = std::max<i64>(bound, cu.degree());
    i64 bound2 = 0;
    for (const auto& cu : fv.coeffs()) bound2 = std::max<i64>(bound2, cu.degree());
    REQUIRE(res.degree() <= bound * fv.degree() + bound2 * fu.degree());
}

TEST_CASE("bivariate resultant agrees with specialized Sylvester") {
    const u64 p = 10007;
    CounterRng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        // random bivariate polys of v-degree 2..3 with u-degree <= 2 coefficients
        auto rand_bi = [&](int dv) {
            std::vector<Poly<Fp>> cs;
            for (int j = 0; j < dv; ++j) cs.push_back(random_poly(static_cast<int>(rng.next_below(3)), p, rng));
            cs.push_back(random_poly(2, p, rng));
            return Poly<Poly<Fp>>::from_coeffs(std::move(cs));
        };
        Poly<Poly<Fp>> a = rand_bi(2 + static_cast<int>(rng.next_below(2)));
        Poly<Poly<Fp>> b = rand_bi(2 + static_cast<int>(rng.next_below(2)));
        Poly<Fp> r = resultant(a, b);
        for (int k = 0; k < 8; ++k) {
            Fp u0 = rng.next_fp(p);
            // skip specializations that drop the leading coefficient
            if (a.leading().eval(u0).is_zero() || b.leading().eval(u0).is_zero()) continue;
            std::vector<Fp> ac, bc;
            for (const auto& cu : a.coeffs()) ac.push_back(cu.eval(u0));
            for (const auto& cu : b.coeffs()) bc.push_back(cu.eval(u0));
            u64 expect = sylvester_resultant(Poly<Fp>::from_coeffs(ac), Poly<Fp>::from_coeffs(bc), p);
            REQUIRE(r.eval(u0).value() == expect);
        }
    }
}

TEST_CASE("rank and kernel") {
    const u64 p = 10007;
    SECTION("identity") {
        MatrixFp m(5, 5, p);
        for (std::size_t i = 0; i < 5; ++i) m.at(i, i) = 1;
        RankKernel rk = rank_and_kernel(m);
        REQUIRE(rk.rank == 5);
        REQUIRE(rk.kernel.empty());
    }
    SECTION("zero matrix") {
        MatrixFp m(3, 4, p);
        RankKernel rk = rank_and_kernel(m);
        REQUIRE(rk.rank == 0);
        REQUIRE(rk.kernel.size() == 4);
    }
    SECTION("random 9x35 has full row rank and a clean kernel") {
        CounterRng rng(37);
        MatrixFp m(9, 35, p);
        for (auto& x : m.a) x = rng.next_below(p);
        RankKernel rk = rank_and_kernel(m);
        REQUIRE(rk.rank == 9);
        REQUIRE(rk.kernel.size() == 26);
        for (const auto& v : rk.kernel) REQUIRE(annihilates(m, v));

        // rank is invariant under row shuffles (independent elimination order)
        std::vector<std::size_t> perm(9);
        for (std::size_t i = 0; i < 9; ++i) perm[i] = i;
        for (int s = 0; s < 5; ++s) {
            std::shuffle(perm.begin(), perm.end(), std::mt19937(s));
            MatrixFp m2(9, 35, p);
            for (std::size_t i = 0; i < 9; ++i)
                for (std::size_t j = 0; j < 35; ++j) m2.at(i, j) = m.at(perm[i], j);
            REQUIRE(rank_and_kernel(m2).rank == 9);
        }
    }
}

TEST_CASE("extension fields") {
    const u64 p = 7;
    SECTION("deterministic modulus search") {
        ExtField K = ExtField::with_degree(p, 2);
        REQUIRE(K.degree() == 2);
        REQUIRE(is_irreducible(K.modulus()));
        // the same call reproduces the same modulus
        ExtField K2 = ExtField::with_degree(p, 2);
        REQUIRE(K.modulus() == K2.modulus());
    }
    SECTION("arithmetic and inverse") {
        ExtField K = ExtField::with_degree(p, 3);
        CounterRng rng(41);
        ExtElem g = K.gen();
        for (int i = 0; i < 30; ++i) {
            ExtElem a = random_field_elem(K.zero(), rng);
            ExtElem b = random_field_elem(K.zero(), rng);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            if (!a.is_zero()) REQUIRE(a * a.inv() == K.one());
        }
        // Fermat: x^(p^m) = x
        REQUIRE(g.pow(7 * 7 * 7) == g);
    }
    SECTION("roots of the modulus live in the field") {
        ExtField K = ExtField::with_degree(p, 4);
        for (const ExtElem& r : roots_of_modulus(K)) {
            // evaluate the modulus at r
            ExtElem acc = K.zero();
            for (int i = K.modulus().degree(); i >= 0; --i)
                acc = acc * r + K.embed(K.modulus()[static_cast<std::size_t>(i)]);
            REQUIRE(acc.is_zero());
        }
    }
    SECTION("rejects reducible modulus") {
        Poly<Fp> sq = poly_from({1, 2, 1}, p);  // (x+1)^2
        REQUIRE_THROWS_AS(ExtField(sq), std::invalid_argument);
    }
}

TEST_CASE("factorization over an extension field") {
    const u64 p = 7;
    ExtField K = ExtField::with_degree(p, 2);
    // (x - g)(x - g^2)(x - 1) over F_49
    ExtElem g = K.gen();
    Poly<ExtElem> f = Poly<ExtElem>::from_coeffs({-g, K.one()});
    f = f * Poly<ExtElem>::from_coeffs({-(g * g), K.one()});
    f = f * Poly<ExtElem>::from_coeffs({-K.one(), K.one()});
    Factorization<ExtElem> fac = uni_factor(f, 5);
    REQUIRE(fac.factors.size() == 3);
    REQUIRE(fac.product() == f);
    for (const auto& [q, m] : fac.factors) REQUIRE(q.degree() == 1);
}
