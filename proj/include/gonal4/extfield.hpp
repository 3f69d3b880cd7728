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

#ifndef GONAL4_EXTFIELD_HPP
#define GONAL4_EXTFIELD_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "gonal4/fp.hpp"
#include "gonal4/poly.hpp"

namespace gonal4 {

/// Extended gcd over a field: returns monic g with s*a + t*b = g.
template <class F>
struct ExtGcd {
    Poly<F> g, s, t;
};

template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() && b.is_zero()) return {Poly<F>(), Poly<F>(), Poly<F>()};
    const F sample = a.is_zero() ? b.leading() : a.leading();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(sample.one_like()), s1;
    Poly<F> t0, t1 = Poly<F>::constant(sample.one_like());
    while (!r1.is_zero()) {
        DivMod<F> d = divmod(r0, r1);
        Poly<F> r2 = d.r;
        Poly<F> s2 = s0 - d.q * s1;
        Poly<F> t2 = t0 - d.q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    F lcinv = r0.leading().inv();
    return {lcinv * r0, lcinv * s0, lcinv * t0};
}

bool is_irreducible(const Poly<Fp>& f);  // defined in factor.hpp

class ExtElem;

/// The field F_{p^m} presented as F_p[x]/(modulus), modulus monic
/// irreducible of degree m. Elements hold a non-owning pointer to their
/// field, which must outlive them.
class ExtField {
public:
    explicit ExtField(Poly<Fp> modulus, bool check = true) : mod_(std::move(modulus)) {
        if (mod_.degree() < 1) throw std::invalid_argument("extension modulus must have positive degree");
        p_ = mod_[0].modulus();
        mod_ = make_monic(mod_);
        if (check && !is_irreducible(mod_))
            throw std::invalid_argument("extension modulus is not irreducible");
    }

    /// F_{p^m} with the first monic irreducible modulus in lexicographic
    /// order of the coefficient vector (c0, c1, ..., c_{m-1}).
    static ExtField with_degree(u64 p, int m);

    u64 p() const { return p_; }
    int degree() const { return mod_.degree(); }
    const Poly<Fp>& modulus() const { return mod_; }

    ExtElem from_poly(const Poly<Fp>& a) const;
    ExtElem zero() const;
    ExtElem one() const;
    ExtElem gen() const;  // the class of x
    ExtElem embed(const Fp& a) const;

private:
    Poly<Fp> mod_;
    u64 p_ = 0;
};

class ExtElem {
public:
    ExtElem(const ExtField* F, Poly<Fp> rep) : F_(F), rep_(std::move(rep)) {}

    const ExtField& field() const { return *F_; }
    const Poly<Fp>& rep() const { return rep_; }

    u64 characteristic() const { return F_->p(); }
    int field_degree() const { return F_->degree(); }

    bool is_zero() const { return rep_.is_zero(); }
    ExtElem zero_like() const { return ExtElem(F_, Poly<Fp>()); }
    ExtElem one_like() const { return ExtElem(F_, Poly<Fp>::constant(Fp(1, F_->p()))); }

    ExtElem operator-() const { return ExtElem(F_, -rep_); }
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        a.match(b);
        return ExtElem(a.F_, a.rep_ + b.rep_);
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
        a.match(b);
        return ExtElem(a.F_, a.rep_ - b.rep_);
    }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        a.match(b);
        return ExtElem(a.F_, poly_mod(a.rep_ * b.rep_, a.F_->modulus()));
    }
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

    ExtElem inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero in extension field");
        ExtGcd<Fp> e = ext_gcd(rep_, F_->modulus());
        if (e.g.degree() != 0) throw std::logic_error("non-invertible element; modulus not irreducible?");
        return ExtElem(F_, poly_mod(e.s, F_->modulus()));
    }

    ExtElem pow(u64 e) const {
        ExtElem r = one_like(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Inverse of the Frobenius x -> x^p; equals x^(p^(m-1)).
    ExtElem pth_root() const {
        ExtElem r = *this;
        for (int i = 0; i + 1 < F_->degree(); ++i) r = r.pow(F_->p());
        return r;
    }

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        return a.F_->modulus() == b.F_->modulus() && a.rep_ == b.rep_;
    }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    std::vector<u64> sort_key() const {
        std::vector<u64> k;
        for (const Fp& c : rep_.coeffs()) k.push_back(c.value());
        return k;
    }

private:
    void match(const ExtElem& o) const {
        if (F_ != o.F_ && F_->modulus() != o.F_->modulus())
            throw std::invalid_argument("mixed extension fields");
    }

    const ExtField* F_;
    Poly<Fp> rep_;
};

inline ExtElem ExtField::from_poly(const Poly<Fp>& a) const {
    return ExtElem(this, poly_mod(a, mod_));
}
inline ExtElem ExtField::zero() const { return ExtElem(this, Poly<Fp>()); }
inline ExtElem ExtField::one() const { return ExtElem(this, Poly<Fp>::constant(Fp(1, p_))); }
inline ExtElem ExtField::gen() const {
    return from_poly(Poly<Fp>::identity_x(Fp(0, p_)));
}
inline ExtElem ExtField::embed(const Fp& a) const {
    if (a.modulus() != p_) throw std::invalid_argument("embed: wrong characteristic");
    return ExtElem(this, a.is_zero() ? Poly<Fp>() : Poly<Fp>::constant(a));
}

inline u64 field_characteristic(const Fp& x) { return x.characteristic(); }
inline int field_degree(const Fp&) { return 1; }
inline u64 field_characteristic(const ExtElem& x) { return x.characteristic(); }
inline int field_degree(const ExtElem& x) { return x.field_degree(); }

inline std::vector<u64> sort_key(const Fp& x) { return {x.value()}; }
inline std::vector<u64> sort_key(const ExtElem& x) { return x.sort_key(); }

/// The m roots of the defining modulus inside the field itself: the class
/// of x and its Frobenius conjugates.
inline std::vector<ExtElem> roots_of_modulus(const ExtField& K) {
    std::vector<ExtElem> roots;
    ExtElem r = K.gen();
    for (int i = 0; i < K.degree(); ++i) {
        roots.push_back(r);
        r = r.pow(K.p());
    }
    return roots;
}

}  // namespace gonal4

#endif  // GONAL4_EXTFIELD_HPP
