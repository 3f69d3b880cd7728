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

#ifndef GONAL4_FP_HPP
#define GONAL4_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonal4 {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

#if !defined(__SIZEOF_INT128__)
#error "gonal4 requires compiler support for __int128 (GCC/Clang)."
#endif

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;  // p < 2^62, no overflow
    return s >= p ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod_u64(u64 base, u64 e, u64 p) {
    u64 r = 1 % p, b = base % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

/// Modular inverse by extended Euclid; throws on non-invertible input.
inline u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("invmod: zero is not invertible");
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(p), nr = static_cast<i64>(a % p);
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<i64>(p);
    return static_cast<u64>(t);
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Accepted field moduli: odd primes p with 5 <= p < 2^62.
/// Characteristics 2 and 3 are excluded (node certificates divide by 2
/// and distinguish cusps from nodes only away from char 3).
inline void check_field_modulus(u64 p) {
    if (p < 5 || p >= (1ull << 62) || !is_prime_u64(p))
        throw std::invalid_argument("field modulus must be a prime in [5, 2^62), got " + std::to_string(p));
}

/// Element of a prime field F_p. The modulus travels with the value so
/// that generic polynomial code can recover the field from any element.
class Fp {
public:
    Fp(u64 v, u64 p) : v_(v % p), p_(p) {}

    static Fp from_int(i64 x, u64 p) {
        i64 r = x % static_cast<i64>(p);
        if (r < 0) r += static_cast<i64>(p);
        return Fp(static_cast<u64>(r), p);
    }

    u64 value() const { return v_; }
    u64 modulus() const { return p_; }
    u64 characteristic() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(addmod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(submod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp(mulmod(a.v_, b.v_, a.p_), a.p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const { return Fp(invmod(v_, p_), p_); }
    Fp pow(u64 e) const { return Fp(powmod_u64(v_, e, p_), p_); }

    /// p-th root; the Frobenius is the identity on the prime field.
    Fp pth_root() const { return *this; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    void match(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed field moduli in Fp arithmetic");
    }

    u64 v_;
    u64 p_;
};

}  // namespace gonal4

#endif  // GONAL4_FP_HPP
