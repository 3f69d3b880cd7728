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

#ifndef GONAL4_HIRZEBRUCH_HPP
#define GONAL4_HIRZEBRUCH_HPP

#include <algorithm>
#include <stdexcept>

#include "gonal4/rational.hpp"

namespace gonal4 {

/// Numerical divisor class alpha*C0 + beta*f on the Hirzebruch surface
/// F_t, where C0 is the section with C0^2 = -t and f a fibre.
struct DivisorClassFt {
    i64 t;
    i64 alpha;
    i64 beta;

    friend bool operator==(const DivisorClassFt& a, const DivisorClassFt& b) {
        return a.t == b.t && a.alpha == b.alpha && a.beta == b.beta;
    }
};

inline DivisorClassFt canonical_class_ft(i64 t) { return {t, -2, -(t + 2)}; }

/// Intersection pairing: C0^2 = -t, C0.f = 1, f^2 = 0.
inline i64 intersect(const DivisorClassFt& d1, const DivisorClassFt& d2) {
    if (d1.t != d2.t) throw std::invalid_argument("intersect: divisor classes live on different surfaces");
    return d1.alpha * d2.beta + d2.alpha * d1.beta - d1.t * d1.alpha * d2.alpha;
}

/// Adjunction genus 1 + D.(D+K)/2 for an effective-type class (alpha >= 0).
inline i64 arithmetic_genus(const DivisorClassFt& d) {
    if (d.alpha < 0) throw std::domain_error("arithmetic_genus: alpha must be >= 0");
    DivisorClassFt k = canonical_class_ft(d.t);
    DivisorClassFt dk{d.t, d.alpha + k.alpha, d.beta + k.beta};
    i64 prod = intersect(d, dk);
    if (prod % 2 != 0) throw std::logic_error("arithmetic_genus: D.(D+K) must be even");
    return 1 + prod / 2;
}

/// Genus of a q-secant curve on a surface ruled by lines, from the curve
/// and surface degrees in the ambient embedding. The (q-1)/2 prefactor is
/// half-integral mid-computation, so the result is an exact rational; the
/// caller asserts integrality where a genus is expected.
inline Rat genus_formula_qsecant(i64 q, i64 deg_y, i64 deg_r) {
    if (q < 1) throw std::domain_error("genus_formula_qsecant: q must be >= 1");
    return Rat(q - 1, 2) * Rat(2 * (deg_y - 1) - q * deg_r);
}

/// Sections of a unisecant class C0 + n f with self-intersection above t.
inline i64 h0_unisecant(i64 n, i64 t) {
    if (t < 0) throw std::out_of_range("h0_unisecant: t must be >= 0");
    if (n < t && n != 0) throw std::out_of_range("h0_unisecant: requires n >= t or n = 0");
    return 2 * n - t + 2;
}

/// h^0 of alpha*C0 + beta*f by pushing forward to the base line: the
/// bundle splits as a sum of O(beta - i t) for i = 0..alpha, and summands
/// of negative degree contribute nothing.
inline i64 h0_line_bundle(const DivisorClassFt& d) {
    if (d.alpha < 0) throw std::out_of_range("h0_line_bundle: alpha must be >= 0");
    i64 total = 0;
    for (i64 i = 0; i <= d.alpha; ++i) total += std::max<i64>(0, d.beta - i * d.t + 1);
    return total;
}

/// Dimension of the family of degree-d unisecants on a degree-r ruled
/// surface (valid when the self-intersection exceeds the invariant).
inline i64 unisecant_family_dim(i64 d, i64 r) { return 2 * d + 1 - r; }

/// Very-ampleness of alpha*C0 + beta*f on F_t.
inline bool very_ample(const DivisorClassFt& d) { return d.alpha >= 1 && d.beta > d.alpha * d.t; }

/// Both bounds that keep a 4-secant class 4*C0 + (lambda+t)*f irreducible
/// with genus at least 10: lambda >= 3t and lambda >= t+5.
inline bool foursecant_irreducible_bound(i64 lambda, i64 t) {
    return lambda >= std::max(3 * t, t + 5);
}

}  // namespace gonal4

#endif  // GONAL4_HIRZEBRUCH_HPP
