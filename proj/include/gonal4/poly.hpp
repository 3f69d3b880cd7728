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

#ifndef GONAL4_POLY_HPP
#define GONAL4_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "gonal4/fp.hpp"

namespace gonal4 {

/// Dense univariate polynomial over a field element type F.
/// Coefficients are stored low-to-high; the zero polynomial is the empty
/// vector and has degree -1. F must provide +, -, *, unary -, ==,
/// is_zero(), zero_like(), one_like() and inv().
template <class F>
class Poly {
public:
    Poly() = default;  // zero polynomial

    static Poly from_coeffs(std::vector<F> cs) {
        Poly r;
        r.c_ = std::move(cs);
        r.trim();
        return r;
    }

    static Poly constant(const F& c) { return from_coeffs({c}); }

    static Poly monomial(const F& c, std::size_t k) {
        if (c.is_zero()) return Poly();
        std::vector<F> cs(k + 1, c.zero_like());
        cs[k] = c;
        Poly r;
        r.c_ = std::move(cs);
        return r;
    }

    static Poly identity_x(const F& sample) { return monomial(sample.one_like(), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    /// Poly models its own coefficient concept, so nested polynomials
    /// (bivariate work) reuse the same arithmetic.
    Poly zero_like() const { return Poly(); }
    Poly one_like() const {
        if (is_zero()) throw std::logic_error("one_like of zero polynomial has no field sample");
        return constant(c_[0].one_like());
    }

    const F& operator[](std::size_t i) const { return c_[i]; }

    F coeff_or_zero(std::size_t i, const F& sample) const {
        return i < c_.size() ? c_[i] : sample.zero_like();
    }

    const F& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_constant() const { return degree() <= 0; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<F> cs(a.c_);
        if (b.c_.size() > cs.size()) cs.resize(b.c_.size(), a.c_[0].zero_like());
        for (std::size_t i = 0; i < b.c_.size(); ++i) cs[i] += b.c_[i];
        return from_coeffs(std::move(cs));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<F> cs;
        cs.reserve(c_.size());
        for (const F& x : c_) cs.push_back(-x);
        Poly r;
        r.c_ = std::move(cs);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> cs(a.c_.size() + b.c_.size() - 1, a.c_[0].zero_like());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) cs[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(cs));
    }

    friend Poly operator*(const F& s, const Poly& a) {
        if (s.is_zero() || a.is_zero()) return Poly();
        std::vector<F> cs;
        cs.reserve(a.c_.size());
        for (const F& x : a.c_) cs.push_back(s * x);
        return from_coeffs(std::move(cs));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    F eval(const F& x) const {
        F acc = x.zero_like();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<F> cs;
        cs.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            // i * c_[i] by repeated addition; works for nested coefficients
            F m = c_[i].zero_like();
            for (std::size_t k = 0; k < i; ++k) m += c_[i];
            cs.push_back(std::move(m));
        }
        return from_coeffs(std::move(cs));
    }

    /// Multiply by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<F> cs(c_.size() + k, c_[0].zero_like());
        for (std::size_t i = 0; i < c_.size(); ++i) cs[i + k] = c_[i];
        Poly r;
        r.c_ = std::move(cs);
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Poly<F> make_monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return a.leading().inv() * a;
}

template <class F>
struct DivMod {
    Poly<F> q, r;
};

/// Euclidean division over a field; b must be nonzero.
template <class F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    F lcinv = b.leading().inv();
    std::vector<F> rem(a.coeffs());
    std::vector<F> quot(a.degree() - b.degree() + 1, a.leading().zero_like());
    for (int i = a.degree(); i >= b.degree(); --i) {
        F c = rem[i];
        if (c.is_zero()) continue;
        F f = c * lcinv;
        quot[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b[j];
    }
    return {Poly<F>::from_coeffs(std::move(quot)), Poly<F>::from_coeffs(std::move(rem))};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).r;
}

template <class F>
Poly<F> poly_div(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).q;
}

/// Division known to be exact; remainder is checked.
template <class F>
Poly<F> poly_exact_div(const Poly<F>& a, const Poly<F>& b) {
    DivMod<F> d = divmod(a, b);
    if (!d.r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
    return d.q;
}

/// Monic gcd; gcd(0, 0) = 0. Throws on mixed base fields (the element
/// arithmetic raises the error).
template <class F>
Poly<F> gcd_monic(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class F>
Poly<F> powmod(const Poly<F>& base, u64 e, const Poly<F>& mod) {
    if (mod.degree() < 1) throw std::invalid_argument("powmod: modulus must have positive degree");
    Poly<F> result = Poly<F>::constant(mod.leading().one_like());
    Poly<F> b = poly_mod(base, mod);
    while (e) {
        if (e & 1) result = poly_mod(result * b, mod);
        b = poly_mod(b * b, mod);
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Resultants via the subresultant pseudo-remainder sequence.  Generic over a
// coefficient ring R: a field element (Fp, ExtElem) or Poly<F> for bivariate
// resultants eliminating the outer variable.
// ---------------------------------------------------------------------------

inline Fp ring_one_like(const Fp& x) { return x.one_like(); }
inline bool ring_is_zero(const Fp& x) { return x.is_zero(); }
inline Fp ring_exact_div(const Fp& a, const Fp& b) { return a * b.inv(); }
inline Fp ring_pow(const Fp& a, u64 e) { return a.pow(e); }

template <class F>
Poly<F> ring_one_like(const Poly<F>& x) {
    if (x.is_zero()) throw std::logic_error("ring_one_like on zero polynomial");
    return Poly<F>::constant(x[0].one_like());
}
template <class F>
bool ring_is_zero(const Poly<F>& x) {
    return x.is_zero();
}
template <class F>
Poly<F> ring_exact_div(const Poly<F>& a, const Poly<F>& b) {
    return poly_exact_div(a, b);
}
template <class F>
Poly<F> ring_pow(Poly<F> a, u64 e) {
    Poly<F> r = ring_one_like(a);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod b, computed without
/// coefficient division.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    R lc = b.leading();
    std::vector<R> rem(a.coeffs());
    for (int i = da; i >= db; --i) {
        R top = rem[i];
        for (int j = 0; j < i; ++j) rem[j] = lc * rem[j];
        if (!ring_is_zero(top)) {
            for (int j = 0; j <= db; ++j) {
                std::size_t k = static_cast<std::size_t>(i - db + j);
                rem[k] = rem[k] - top * b[j];
            }
        }
        rem[i] = top - top;  // zero of the right ring
    }
    rem.erase(rem.begin() + db, rem.end());
    return Poly<R>::from_coeffs(std::move(rem));
}

/// Res(a, b) over the coefficient ring R, by the subresultant PRS.
/// Zero inputs are a usage error.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    R one = ring_one_like(a.leading());
    R zero = a.leading() - a.leading();
    bool negate = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    }
    if (b.degree() == 0) {
        R r = ring_pow(b.leading(), static_cast<u64>(a.degree()));
        return negate ? zero - r : r;
    }
    R g = one, h = one;
    while (true) {
        int da = a.degree(), db = b.degree();
        u64 d = static_cast<u64>(da - db);
        if ((da & 1) && (db & 1)) negate = !negate;
        Poly<R> r = pseudo_rem(a, b);
        if (r.is_zero()) return zero;  // positive-degree common factor
        a = std::move(b);
        // divide by g*h^d, exact by subresultant theory
        R denom = g * ring_pow(h, d);
        std::vector<R> cs;
        cs.reserve(r.coeffs().size());
        for (const R& c : r.coeffs()) cs.push_back(ring_exact_div(c, denom));
        b = Poly<R>::from_coeffs(std::move(cs));
        g = a.leading();
        if (d > 0) {
            // h <- g^d / h^(d-1)
            h = ring_exact_div(ring_pow(g, d), ring_pow(h, d - 1));
        }
        if (b.degree() <= 0) break;
    }
    if (b.is_zero()) return zero;
    u64 da = static_cast<u64>(a.degree());
    R r = ring_exact_div(ring_pow(b.leading(), da), ring_pow(h, da - 1));
    return negate ? zero - r : r;
}

}  // namespace gonal4

#endif  // GONAL4_POLY_HPP
