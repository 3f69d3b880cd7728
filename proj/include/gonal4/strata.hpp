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

#ifndef GONAL4_STRATA_HPP
#define GONAL4_STRATA_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gonal4/invariants.hpp"
#include "gonal4/scroll.hpp"

namespace gonal4 {

// Dimensions of the tetragonal moduli strata, indexed by the invariants
// (lambda) and (lambda, a, b), for t = 0, plus the t >= 1 strata.

/// Dimension of the parameter space of curves with invariant lambda on
/// the quadric: g + 2*lambda + 7.
inline i64 dim_W_lambda(i64 g, i64 lambda) { return g + 2 * lambda + 7; }

/// Dimension of the fibre of the projection to moduli: 7 when g is odd
/// and lambda sits at the top of its range, else dim Aut(P1 x P1) = 6.
inline i64 theta_fiber_dim(i64 g, i64 lambda) {
    return (g % 2 == 1 && lambda == lambda_max(g)) ? 7 : 6;
}

/// Dimension of the lambda-stratum of the tetragonal moduli space.
/// Equals g + 2*lambda + 1 below the top stratum and 2g + 3 at the top.
inline i64 dim_M_lambda(i64 g, i64 lambda) {
    i64 d = dim_W_lambda(g, lambda) - theta_fiber_dim(g, lambda);
    i64 expected = (lambda == lambda_max(g)) ? 2 * g + 3 : g + 2 * lambda + 1;
    if (d != expected) throw std::logic_error("dim_M_lambda: fibre bookkeeping is inconsistent");
    return d;
}

/// Dimension of the (lambda, a, b) sub-stratum. The case split compares
/// 2a with g - lambda - 1 in integers, since the midpoint can be
/// half-integral. In the shallow branch a = b = c cannot occur.
inline i64 dim_M_lambda_ab(i64 g, i64 lambda, i64 a, i64 b) {
    InvariantTuple r = check_admissible_t0(g, lambda, a, b);
    if (!r.admissible) {
        std::string msg = "dim_M_lambda_ab: inadmissible tuple:";
        for (const auto& t : r.reasons) msg += " " + t;
        throw std::domain_error(msg);
    }
    if (2 * a >= g - lambda - 1) {
        return 2 * (2 * a + b + lambda) + 10 - g - r.eps - r.tau - r.xi;
    }
    if (r.eps == 2) throw std::logic_error("dim_M_lambda_ab: a=b=c cannot occur below the midpoint");
    return 2 * (a + b) + lambda + 8 - r.eps - r.xi;
}

/// Dimensions of the t >= 1 stratum: parameter space 2g + t - lambda + 11
/// and moduli 2g - lambda + 6; the difference t + 5 is the automorphism
/// dimension of the underlying ruled surface.
inline std::pair<i64, i64> dim_M_lambda_t(i64 g, i64 lambda, i64 t) {
    InvariantTuple r = check_admissible_tpos(g, lambda, t);
    if (!r.admissible) {
        std::string msg = "dim_M_lambda_t: inadmissible tuple:";
        for (const auto& tag : r.reasons) msg += " " + tag;
        throw std::domain_error(msg);
    }
    i64 w = 2 * g + t - lambda + 11;
    i64 m = 2 * g - lambda + 6;
    if (w - m != t + 5) throw std::logic_error("dim_M_lambda_t: automorphism bookkeeping violated");
    return {w, m};
}

/// Scroll type of the generic tetragonal curve of genus g, determined by
/// g mod 3.
inline ScrollType generic_tuple(i64 g) {
    i64 p = g / 3;
    switch (g % 3) {
        case 0: return ScrollType(p - 1, p - 1, p - 1);
        case 1: return ScrollType(p - 1, p - 1, p);
        default: return ScrollType(p - 1, p, p);
    }
}

struct StratumRecord {
    InvariantTuple tuple;      // a = b = c = -1 on lambda-level rows
    bool lambda_level = false;
    i64 dim_W = 0;
    i64 dim_fiber_theta = 0;
    i64 dim_M = 0;
    bool is_generic_stratum = false;
    std::string source;  // formula that produced dim_M
};

struct MaximalityViolation {
    i64 g, lambda, a, b;
    i64 dim_ab, dim_lambda;
    bool expected_generic;  // true when the tuple is the generic one
};

/// Checks, tuple by tuple, that every sub-stratum dimension stays at or
/// below its lambda-stratum and that equality happens exactly at the
/// generic scroll type. Violations are reported, not swallowed.
inline std::vector<MaximalityViolation> maximality_violations(i64 g) {
    std::vector<MaximalityViolation> out;
    ScrollType gen = generic_tuple(g);
    for (const InvariantTuple& r : enumerate_admissible(g, 0)) {
        i64 dl = dim_M_lambda(g, r.lambda);
        i64 dab = dim_M_lambda_ab(g, r.lambda, r.a, r.b);
        bool is_gen = ScrollType(r.a, r.b, r.c) == gen;
        bool ok = is_gen ? (dab == dl) : (dab < dl);
        if (!ok) out.push_back({g, r.lambda, r.a, r.b, dab, dl, is_gen});
    }
    return out;
}

/// Stratification table for genus g at t = 0: one row per admissible
/// lambda (descending), each followed by its (a, b) sub-strata. Checks
/// that the lambda-dimensions increase strictly with lambda and that the
/// top stratum has dimension 2g + 3.
inline std::vector<StratumRecord> stratification_table(i64 g) {
    if (g < 10) throw std::domain_error("stratification_table: g must be >= 10");
    std::vector<InvariantTuple> all = enumerate_admissible(g, 0);
    std::vector<StratumRecord> rows;
    i64 prev_dim = -1;
    bool top = true;
    for (i64 lambda = lambda_max(g); lambda >= lambda_min_t0(g); --lambda) {
        StratumRecord lrow;
        lrow.lambda_level = true;
        lrow.tuple.g = g;
        lrow.tuple.t = 0;
        lrow.tuple.lambda = lambda;
        lrow.tuple.a = lrow.tuple.b = lrow.tuple.c = -1;
        lrow.tuple.delta = delta_invariant(g, lambda, 0);
        lrow.tuple.xi = (2 * lambda == g + 3) ? 1 : 0;
        lrow.tuple.admissible = true;
        lrow.dim_W = dim_W_lambda(g, lambda);
        lrow.dim_fiber_theta = theta_fiber_dim(g, lambda);
        lrow.dim_M = dim_M_lambda(g, lambda);
        lrow.source = (lambda == lambda_max(g)) ? "2g+3" : "g+2*lambda+1";
        if (top) {
            if (lrow.dim_M != 2 * g + 3)
                throw std::logic_error("stratification_table: top stratum must have dimension 2g+3");
            top = false;
        }
        if (prev_dim >= 0 && lrow.dim_M >= prev_dim)
            throw std::logic_error("stratification_table: dimensions must decrease with lambda");
        prev_dim = lrow.dim_M;
        rows.push_back(lrow);

        ScrollType gen = generic_tuple(g);
        for (const InvariantTuple& r : all) {
            if (r.lambda != lambda) continue;
            StratumRecord srow;
            srow.tuple = r;
            srow.dim_M = dim_M_lambda_ab(g, lambda, r.a, r.b);
            srow.dim_fiber_theta = theta_fiber_dim(g, lambda);
            srow.dim_W = srow.dim_M + srow.dim_fiber_theta;
            srow.is_generic_stratum = ScrollType(r.a, r.b, r.c) == gen;
            srow.source = (2 * r.a >= g - lambda - 1) ? "2(2a+b+lambda)+10-g-eps-tau-xi"
                                                      : "2(a+b)+lambda+8-eps-xi";
            rows.push_back(std::move(srow));
        }
    }
    return rows;
}

/// t >= 1 rows: one per admissible lambda for the given t.
inline std::vector<StratumRecord> stratification_table_t(i64 g, i64 t) {
    std::vector<StratumRecord> rows;
    for (const InvariantTuple& r : enumerate_admissible(g, t)) {
        auto [w, m] = dim_M_lambda_t(g, r.lambda, t);
        StratumRecord row;
        row.tuple = r;
        row.dim_W = w;
        row.dim_M = m;
        row.dim_fiber_theta = t + 5;
        row.source = "2g-lambda+6";
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gonal4

#endif  // GONAL4_STRATA_HPP
