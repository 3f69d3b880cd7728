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

#include "gonal4/hirzebruch.hpp"
#include "gonal4/invariants.hpp"
#include "gonal4/rng.hpp"

using namespace gonal4;

TEST_CASE("intersection pairing") {
    DivisorClassFt c0{2, 1, 0};
    REQUIRE(intersect(c0, c0) == -2);

    DivisorClassFt f{2, 0, 1};
    REQUIRE(intersect(f, f) == 0);

    // (4C0 + 11f).C0 on F_2: lambda = 9, t = 2 gives lambda - 3t = 3
    DivisorClassFt x{2, 4, 11};
    REQUIRE(intersect(x, c0) == 3);

    DivisorClassFt other{1, 1, 0};
    REQUIRE_THROWS_AS(intersect(c0, other), std::invalid_argument);
}

TEST_CASE("intersection pairing is symmetric and bilinear") {
    CounterRng rng(3);
    for (int i = 0; i < 100; ++i) {
        i64 t = static_cast<i64>(rng.next_below(7));
        auto rnd = [&]() {
            return DivisorClassFt{t, static_cast<i64>(rng.next_below(21)) - 10,
                                  static_cast<i64>(rng.next_below(21)) - 10};
        };
        DivisorClassFt a = rnd(), b = rnd(), c = rnd();
        REQUIRE(intersect(a, b) == intersect(b, a));
        DivisorClassFt bc{t, b.alpha + c.alpha, b.beta + c.beta};
        REQUIRE(intersect(a, bc) == intersect(a, b) + intersect(a, c));
    }
}

TEST_CASE("adjunction genus") {
    // 4-secant class 4C0 + (lambda+t)f has genus 3(lambda-t-1)
    for (i64 t = 0; t <= 5; ++t)
        for (i64 lambda = 3 * t + 5; lambda <= 3 * t + 20; ++lambda) {
            DivisorClassFt d{t, 4, lambda + t};
            REQUIRE(arithmetic_genus(d) == 3 * (lambda - t - 1));
        }

    // rational directrix
    for (i64 t = 0; t <= 5; ++t) REQUIRE(arithmetic_genus(DivisorClassFt{t, 1, 0}) == 0);

    // bidegree (2, lambda-2) on the quadric: genus (2-1)(lambda-3)
    for (i64 lambda = 5; lambda <= 20; ++lambda)
        REQUIRE(arithmetic_genus(DivisorClassFt{0, 2, lambda - 2}) == lambda - 3);

    REQUIRE_THROWS_AS(arithmetic_genus(DivisorClassFt{0, -1, 3}), std::domain_error);
}

TEST_CASE("q-secant genus formula") {
    // unisecants are rational regardless of the degrees
    REQUIRE(genus_formula_qsecant(1, 17, 5) == Rat(0));
    REQUIRE(genus_formula_qsecant(1, 100, 99) == Rat(0));

    // bisecant of degree 2n on a line-ruled surface of degree 2n-2: the
    // curve is of type (2, 2) on the quadric model, genus 1 by adjunction
    for (i64 n = 2; n <= 12; ++n) {
        Rat g = genus_formula_qsecant(2, 2 * n, 2 * n - 2);
        REQUIRE(g == Rat(arithmetic_genus(DivisorClassFt{0, 2, 2})));
        REQUIRE(g == Rat(1));
    }

    REQUIRE_THROWS_AS(genus_formula_qsecant(0, 1, 1), std::domain_error);
}

TEST_CASE("q-secant genus formula agrees with adjunction on scroll embeddings") {
    // embed F_t by the unisecant class E = C0 + e f (e >= t): a q-secant
    // class D = q C0 + beta f has curve degree D.E and the surface degree
    // is E.E; the formula must reproduce the adjunction genus exactly
    CounterRng rng(5);
    for (int i = 0; i < 300; ++i) {
        i64 t = static_cast<i64>(rng.next_below(7));
        i64 e = t + static_cast<i64>(rng.next_below(10)) + 1;
        i64 q = 1 + static_cast<i64>(rng.next_below(6));
        i64 beta = static_cast<i64>(rng.next_below(30));
        DivisorClassFt d{t, q, beta};
        DivisorClassFt emb{t, 1, e};
        Rat via_formula = genus_formula_qsecant(q, intersect(d, emb), intersect(emb, emb));
        REQUIRE(via_formula == Rat(arithmetic_genus(d)));
    }
}

TEST_CASE("unisecant section counts") {
    REQUIRE(h0_unisecant(0, 0) == 2);
    REQUIRE(h0_unisecant(5, 1) == 11);
    for (i64 t = 0; t <= 10; ++t) {
        REQUIRE(h0_unisecant(t, t) == t + 2);
        // pushforward oracle
        REQUIRE(h0_unisecant(t, t) == h0_line_bundle(DivisorClassFt{t, 1, t}));
    }
    REQUIRE_THROWS_AS(h0_unisecant(2, 3), std::out_of_range);
}

TEST_CASE("line bundle sections by pushforward") {
    REQUIRE(h0_line_bundle(DivisorClassFt{3, 0, 0}) == 1);  // constants

    // conic embedding class: g + delta sections
    for (i64 t = 0; t <= 4; ++t)
        for (i64 lambda = 2 * t + 3; lambda <= 2 * t + 15; ++lambda)
            REQUIRE(h0_line_bundle(DivisorClassFt{t, 2, lambda - 2}) == 3 * (lambda - t - 1));

    // agreement with the unisecant count on its whole domain
    for (i64 t = 0; t <= 50; ++t)
        for (i64 n = t; n <= 50; ++n)
            REQUIRE(h0_line_bundle(DivisorClassFt{t, 1, n}) == h0_unisecant(n, t));

    // clamping: strongly negative twists contribute nothing
    REQUIRE(h0_line_bundle(DivisorClassFt{5, 3, 1}) == 2);  // 2 + 0 + 0 + 0
    REQUIRE_THROWS_AS(h0_line_bundle(DivisorClassFt{0, -2, 1}), std::out_of_range);
}

TEST_CASE("unisecant family dimension") {
    REQUIRE(unisecant_family_dim(7, 10) == 5);
    REQUIRE(unisecant_family_dim(5, 10) == 1);
    // family of unisecants of degree a + delta on a surface of degree
    // a + b + delta
    for (i64 a = 1; a <= 6; ++a)
        for (i64 b = a; b <= 8; ++b)
            for (i64 delta = 0; delta <= 5; ++delta)
                REQUIRE(unisecant_family_dim(a + delta, a + b + delta) == a - b + delta + 1);
}

TEST_CASE("very ampleness") {
    for (i64 t = 0; t <= 4; ++t)
        for (i64 lambda = 2 * t + 3; lambda <= 2 * t + 10; ++lambda)
            REQUIRE(very_ample(DivisorClassFt{t, 2, lambda - 2}));
    REQUIRE(!very_ample(DivisorClassFt{1, 0, 1}));  // fibre class
    REQUIRE(!very_ample(DivisorClassFt{2, 2, 4}));  // boundary: 4 = 2t not >
    REQUIRE(very_ample(DivisorClassFt{2, 2, 5}));
}

TEST_CASE("irreducibility bound for 4-secant classes") {
    for (i64 t = 1; t <= 6; ++t) REQUIRE(!foursecant_irreducible_bound(3 * t - 1, t));
    REQUIRE(foursecant_irreducible_bound(5, 0));
    REQUIRE(!foursecant_irreducible_bound(4, 0));
    REQUIRE(!foursecant_irreducible_bound(6, 2));  // needs max(6, 7) = 7
    REQUIRE(foursecant_irreducible_bound(7, 2));
}

TEST_CASE("adjunction genus minus g equals the node count") {
    for (i64 g = 10; g <= 40; ++g) {
        for (const InvariantTuple& r : enumerate_admissible(g, 0)) {
            DivisorClassFt d{0, 4, r.lambda};
            REQUIRE(arithmetic_genus(d) - g == r.delta);
        }
        for (i64 t = 1; 6 * t <= g + 3; ++t)
            for (const InvariantTuple& r : enumerate_admissible(g, t)) {
                DivisorClassFt d{t, 4, r.lambda + t};
                REQUIRE(arithmetic_genus(d) - g == r.delta);
            }
    }
}
