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

#ifndef GONAL4_RATIONAL_HPP
#define GONAL4_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

#include "gonal4/fp.hpp"

namespace gonal4 {

/// Exact rational on 64-bit parts with 128-bit cross multiplication for
/// comparisons. All the range arithmetic in this project stays far below
/// the overflow line.
struct Rat {
    i64 num = 0;
    i64 den = 1;  // always > 0

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    i64 floor() const {
        i64 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    i64 ceil() const {
        i64 q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// ceil(a / b) for integers, b > 0.
inline i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

/// floor(a / b) for integers, b > 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace gonal4

#endif  // GONAL4_RATIONAL_HPP
