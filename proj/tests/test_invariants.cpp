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
#include <tuple>

#include "gonal4/invariants.hpp"
#include "gonal4/strata.hpp"

using namespace gonal4;

TEST_CASE("node count") {
    REQUIRE(delta_invariant(12, 6, 0) == 3);
    REQUIRE(delta_invariant(10, 5, 0) == 2);
    // boundary: delta = 0 exactly when 3(lambda - t - 1) = g
    for (i64 t = 0; t <= 4; ++t)
        for (i64 k = 4; k <= 20; ++k) {
            i64 g = 3 * k;  // lambda = g/3 + t + 1 integral
            REQUIRE(delta_invariant(g, k + t + 1, t) == 0);
        }
}

TEST_CASE("lower bound for the first scroll part") {
    // the threshold line 5*lambda = 2g + 3t + 6 makes both branches agree
    REQUIRE(a_min(12, 6, 0) == 1);
    REQUIRE(ceil_div(6 - 0 - 4, 2) == 1);
    REQUIRE(12 - 2 * 6 + 0 + 1 == 1);

    REQUIRE(a_min(10, 5, 0) == 1);  // 5*5 < 26, so g - 2*lambda + 1

    // branch agreement on every integral point of the threshold line
    for (i64 g = 10; g <= 200; ++g)
        for (i64 t = 0; 6 * t <= g + 3; ++t) {
            if ((2 * g + 3 * t + 6) % 5 != 0) continue;
            i64 lambda = (2 * g + 3 * t + 6) / 5;
            REQUIRE(ceil_div(lambda - t - 4, 2) == g - 2 * lambda + t + 1);
            REQUIRE(a_min(g, lambda, t) == g - 2 * lambda + t + 1);
        }

    // absolute floor at t = 0: over all lambda the minimum is (g-7)/5,
    // reached on the threshold line when it is integral
    for (i64 g = 10; g <= 100; ++g) {
        if ((2 * g + 6) % 5 != 0) continue;
        i64 best = g;
        for (i64 lambda = lambda_min_t0(g); lambda <= lambda_max(g); ++lambda)
            best = std::min(best, a_min(g, lambda, 0));
        REQUIRE(best == (g - 7) / 5);
        REQUIRE(a_min(g, (2 * g + 6) / 5, 0) == (g - 7) / 5);
    }
}

TEST_CASE("correction bits") {
    EpsTauXi e = eps_tau_xi(12, 6, 3, 3, 3);
    REQUIRE(e.eps == 2);
    REQUIRE(e.tau == 1);
    REQUIRE(e.xi == 0);

    e = eps_tau_xi(12, 6, 2, 3, 4);
    REQUIRE(e.eps == 0);
    REQUIRE(e.tau == 0);

    e = eps_tau_xi(11, 7, 2, 3, 3);
    REQUIRE(e.xi == 1);  // 2*7 = 11+3
    REQUIRE(e.eps == 1);

    REQUIRE_THROWS_AS(eps_tau_xi(12, 6, 3, 2, 4), std::invalid_argument);
}

TEST_CASE("admissibility at t = 0") {
    InvariantTuple r = check_admissible_t0(12, 6, 3, 3);
    REQUIRE(r.admissible);
    REQUIRE(r.c == 3);
    REQUIRE(r.delta == 3);

    // regression fixture: every constraint passes exactly on its boundary
    r = check_admissible_t0(12, 6, 1, 4);
    REQUIRE(r.admissible);
    REQUIRE(r.c == 4);
    REQUIRE(r.amin == 1);

    r = check_admissible_t0(12, 9, 1, 1);
    REQUIRE(!r.admissible);
    REQUIRE(std::find(r.reasons.begin(), r.reasons.end(), "R1") != r.reasons.end());

    r = check_admissible_t0(12, 6, 3, 2);
    REQUIRE(!r.admissible);
    REQUIRE(std::find(r.reasons.begin(), r.reasons.end(), "a<=b<=c") != r.reasons.end());

    REQUIRE_THROWS_AS(check_admissible_t0(9, 5, 1, 1), std::domain_error);
}

TEST_CASE("admissibility at t >= 1") {
    // the parts are forced by (g, lambda, t)
    InvariantTuple r = check_admissible_tpos(15, 8, 1);
    REQUIRE(!r.admissible);
    REQUIRE(r.delta == 3);
    REQUIRE(r.a == 1);
    REQUIRE(r.b == 5);
    REQUIRE(r.c == 6);
    REQUIRE(r.a + r.b + r.c == 15 - 3);
    REQUIRE(std::find(r.reasons.begin(), r.reasons.end(), "lambda>=2delta+3t") != r.reasons.end());
    REQUIRE(std::find(r.reasons.begin(), r.reasons.end(), "lambda<=(2g+3t+6)/5") != r.reasons.end());

    r = check_admissible_tpos(15, 7, 1);
    REQUIRE(r.admissible);
    REQUIRE(r.delta == 0);
    REQUIRE(r.a == 3);
    REQUIRE(r.b == 4);
    REQUIRE(r.c == 5);

    // triple boundary: t at its cap, lambda at both ends of its range
    r = check_admissible_tpos(21, 12, 4);
    REQUIRE(r.admissible);
    REQUIRE(r.delta == 0);
    REQUIRE(r.a + r.b + r.c == 18);

    REQUIRE_THROWS_AS(check_admissible_tpos(15, 7, 0), std::domain_error);
}

TEST_CASE("forced parts always sum to g - 3") {
    for (i64 g = 10; g <= 60; ++g)
        for (i64 t = 1; 6 * t <= g + 3; ++t)
            for (const InvariantTuple& r : enumerate_admissible(g, t))
                REQUIRE(r.a + r.b + r.c == g - 3);
}

TEST_CASE("enumeration at genus 10") {
    std::vector<InvariantTuple> all = enumerate_admissible(10, 0);
    auto has = [&](i64 lambda, i64 a, i64 b) {
        for (const auto& r : all)
            if (r.lambda == lambda && r.a == a && r.b == b) return true;
        return false;
    };
    REQUIRE(has(5, 1, 3));
    REQUIRE(has(5, 2, 2));

    // at lambda = 6 the range comes down to a_min = 1 and a+b in {3, 4}
    for (const auto& r : all) {
        if (r.lambda != 6) continue;
        REQUIRE(r.amin == 1);
        REQUIRE((r.a + r.b == 3 || r.a + r.b == 4));
    }

    REQUIRE(enumerate_admissible(10, 3).empty());  // t capped at (g+3)/6
}

TEST_CASE("enumeration round-trips through the checker") {
    for (i64 g : {10, 11, 12, 13, 17, 21, 26}) {
        std::vector<InvariantTuple> all = enumerate_admissible(g, 0);
        REQUIRE(!all.empty());
        for (const auto& r : all) REQUIRE(check_admissible_t0(g, r.lambda, r.a, r.b).admissible);
        REQUIRE(std::is_sorted(all.begin(), all.end(), [](const auto& x, const auto& y) {
            return std::tuple(x.lambda, x.a, x.b) < std::tuple(y.lambda, y.a, y.b);
        }));
    }
}

TEST_CASE("admissible tuples exist for every genus") {
    for (i64 g = 10; g <= 40; ++g) REQUIRE(!enumerate_admissible(g, 0).empty());
    // for large genus, the generic scroll type at the top lambda works
    for (i64 g = 12; g <= 200; ++g) {
        ScrollType gen = generic_tuple(g);
        REQUIRE(check_admissible_t0(g, lambda_max(g), gen.a, gen.b).admissible);
    }
}

TEST_CASE("scroll part floor") {
    REQUIRE(ab_floor(11) == Rat(3));
    REQUIRE(ab_floor(10) == Rat(5, 2));

    // g - lambda - 1 >= (g-5)/2 whenever lambda <= (g+3)/2
    for (i64 g = 10; g <= 80; ++g)
        for (i64 lambda = lambda_min_t0(g); 2 * lambda <= g + 3; ++lambda)
            REQUIRE(Rat(g - lambda - 1) >= ab_floor(g));

    for (i64 g = 10; g <= 40; ++g)
        for (const InvariantTuple& r : enumerate_admissible(g, 0)) {
            REQUIRE(Rat(r.a + r.b) >= ab_floor(g));
            REQUIRE(r.c <= r.lambda - 2);
        }
}

TEST_CASE("series degrees") {
    SeriesDegrees s = series_degrees(7, 2);
    REQUIRE(s.phi_degree == 4);
    REQUIRE(s.delta_series_degree == 9);
    REQUIRE(s.hyperplane_degree == 13);
    REQUIRE(s.hyperplane_degree == s.phi_degree + s.delta_series_degree);
}
