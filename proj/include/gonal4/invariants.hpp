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

#ifndef GONAL4_INVARIANTS_HPP
#define GONAL4_INVARIANTS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gonal4/rational.hpp"

namespace gonal4 {

// Admissibility of tetragonal invariant tuples (g, t, lambda, a, b).
// All range comparisons are exact; rationals like (2g+3t+6)/5 are handled
// by cross-multiplied integer comparisons.

/// Node count of the standard model: 3(lambda - t - 1) - g. May be
/// negative, in which case the tuple is inadmissible.
inline i64 delta_invariant(i64 g, i64 lambda, i64 t = 0) { return 3 * (lambda - t - 1) - g; }

/// Lower bound for the scroll part a. The two branches meet exactly on
/// the line 5*lambda = 2g + 3t + 6 and agree there.
inline i64 a_min(i64 g, i64 lambda, i64 t = 0) {
    if (5 * lambda >= 2 * g + 3 * t + 6) return ceil_div(lambda - t - 4, 2);
    return g - 2 * lambda + t + 1;
}

struct EpsTauXi {
    int eps;  // 0 if b<c, 1 if a<b=c, 2 if a=b=c
    int tau;  // 0 if a<b, 1 if a=b
    int xi;   // 1 iff 2*lambda = g+3
};

inline EpsTauXi eps_tau_xi(i64 g, i64 lambda, i64 a, i64 b, i64 c) {
    if (a > b || b > c) throw std::invalid_argument("eps_tau_xi: requires a <= b <= c");
    int eps = b < c ? 0 : (a < b ? 1 : 2);
    int tau = a < b ? 0 : 1;
    int xi = (2 * lambda == g + 3) ? 1 : 0;
    return {eps, tau, xi};
}

/// Lower bound a + b >= (g-5)/2, exact.
inline Rat ab_floor(i64 g) { return Rat(g - 5, 2); }

/// Largest admissible lambda: floor((g+3)/2), which coincides with
/// ceil((g+2)/2) on integers for every g.
inline i64 lambda_max(i64 g) { return floor_div(g + 3, 2); }

inline i64 lambda_min_t0(i64 g) { return ceil_div(g + 3, 3); }

/// Degrees of the linear series attached to an embedded model: the gonal
/// pencil has degree 4, the residual series degree lambda + t, and the
/// hyperplane series their sum.
struct SeriesDegrees {
    i64 phi_degree = 4;
    i64 delta_series_degree;
    i64 hyperplane_degree;
};

inline SeriesDegrees series_degrees(i64 lambda, i64 t) {
    return {4, lambda + t, lambda + t + 4};
}

struct InvariantTuple {
    i64 g = 0, t = 0, lambda = 0;
    i64 a = 0, b = 0, c = 0;
    i64 delta = 0;
    int eps = 0, tau = 0, xi = 0;
    i64 amin = 0;
    bool admissible = false;
    std::vector<std::string> reasons;  // violated-constraint tags, empty when admissible
};

namespace detail {

inline void require(bool ok, const char* tag, std::vector<std::string>& reasons) {
    if (!ok) reasons.emplace_back(tag);
}

}  // namespace detail

/// Admissibility at t = 0: the ranges
///   (R1)  (g+3)/3 <= lambda <= (g+3)/2
///   (R2)  a_min <= a <= (g-3)/3
///   (R3)  g - lambda - 1 <= a + b <= 2(g-3)/3
/// together with 0 <= a <= b <= c and delta >= 0. Rejected tuples come
/// back fully populated with the violated tags.
inline InvariantTuple check_admissible_t0(i64 g, i64 lambda, i64 a, i64 b) {
    if (g < 10) throw std::domain_error("admissibility is defined for g >= 10");
    InvariantTuple r;
    r.g = g;
    r.t = 0;
    r.lambda = lambda;
    r.a = a;
    r.b = b;
    r.c = g - 3 - a - b;
    r.delta = delta_invariant(g, lambda, 0);
    r.amin = a_min(g, lambda, 0);

    detail::require(3 * lambda >= g + 3 && 2 * lambda <= g + 3, "R1", r.reasons);
    detail::require(a >= r.amin && 3 * a <= g - 3, "R2", r.reasons);
    detail::require(a + b >= g - lambda - 1 && 3 * (a + b) <= 2 * (g - 3), "R3", r.reasons);
    detail::require(0 <= a && a <= b && b <= r.c, "a<=b<=c", r.reasons);
    detail::require(r.delta >= 0, "delta>=0", r.reasons);

    r.admissible = r.reasons.empty();
    if (a <= b && b <= r.c && a >= 0) {
        EpsTauXi e = eps_tau_xi(g, lambda, a, b, r.c);
        r.eps = e.eps;
        r.tau = e.tau;
        r.xi = e.xi;
    }
    return r;
}

/// Admissibility at t >= 1 with all double points distinct. The scroll
/// parts are forced: a = g + t - 2*lambda + 1, b = lambda - t - 2,
/// c = lambda - 2. The ranges are
///   (g+3)/3 + t <= lambda <= (g+3)/2,   1 <= t <= (g+3)/6,
///   lambda >= 2*delta + 3t   (equivalently 5*lambda <= 2g + 3t + 6).
inline InvariantTuple check_admissible_tpos(i64 g, i64 lambda, i64 t) {
    if (g < 10) throw std::domain_error("admissibility is defined for g >= 10");
    if (t < 1) throw std::domain_error("check_admissible_tpos: t must be >= 1");
    InvariantTuple r;
    r.g = g;
    r.t = t;
    r.lambda = lambda;
    r.a = g + t - 2 * lambda + 1;
    r.b = lambda - t - 2;
    r.c = lambda - 2;
    r.delta = delta_invariant(g, lambda, t);
    r.amin = a_min(g, lambda, t);

    detail::require(3 * lambda >= g + 3 + 3 * t && 2 * lambda <= g + 3, "R1", r.reasons);
    detail::require(6 * t <= g + 3, "t-range", r.reasons);
    detail::require(lambda >= 2 * r.delta + 3 * t, "lambda>=2delta+3t", r.reasons);
    detail::require(5 * lambda <= 2 * g + 3 * t + 6, "lambda<=(2g+3t+6)/5", r.reasons);
    detail::require(0 <= r.a && r.a <= r.b && r.b <= r.c, "a<=b<=c", r.reasons);
    detail::require(r.delta >= 0, "delta>=0", r.reasons);

    r.admissible = r.reasons.empty();
    if (r.a >= 0 && r.a <= r.b && r.b <= r.c) {
        EpsTauXi e = eps_tau_xi(g, lambda, r.a, r.b, r.c);
        r.eps = e.eps;
        r.tau = e.tau;
        r.xi = e.xi;
    }
    return r;
}

/// All admissible tuples for a genus, sorted by (lambda, a, b). The scan
/// deliberately runs one step past the lambda ceiling.
inline std::vector<InvariantTuple> enumerate_admissible(i64 g, i64 t = 0) {
    if (g < 10) throw std::domain_error("admissibility is defined for g >= 10");
    std::vector<InvariantTuple> out;
    i64 lo = t == 0 ? lambda_min_t0(g) : ceil_div(g + 3 + 3 * t, 3);
    i64 hi = lambda_max(g) + 1;
    for (i64 lambda = lo; lambda <= hi; ++lambda) {
        if (t == 0) {
            for (i64 a = 0; a <= g; ++a)
                for (i64 b = a; b <= g; ++b) {
                    InvariantTuple r = check_admissible_t0(g, lambda, a, b);
                    if (r.admissible) out.push_back(std::move(r));
                }
        } else {
            InvariantTuple r = check_admissible_tpos(g, lambda, t);
            if (r.admissible) out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const InvariantTuple& x, const InvariantTuple& y) {
        if (x.lambda != y.lambda) return x.lambda < y.lambda;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

}  // namespace gonal4

#endif  // GONAL4_INVARIANTS_HPP
