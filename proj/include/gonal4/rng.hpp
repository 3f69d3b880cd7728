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

#ifndef GONAL4_RNG_HPP
#define GONAL4_RNG_HPP

#include <cstdint>

#include "gonal4/fp.hpp"

namespace gonal4 {

inline u64 mix64(u64 z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Counter-based generator: the i-th output depends only on (seed, i),
/// so streams can be replayed or split without shared state.
class CounterRng {
public:
    explicit CounterRng(u64 seed, u64 stream = 0) : seed_(mix64(seed ^ mix64(stream))) {}

    u64 next() { return mix64(seed_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }

    /// Uniform value in [0, n); n must be nonzero.
    u64 next_below(u64 n) {
        // rejection keeps the distribution exact
        u64 limit = ~0ull - (~0ull % n);
        u64 x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

    Fp next_fp(u64 p) { return Fp(next_below(p), p); }

private:
    u64 seed_;
    u64 ctr_ = 0;
};

/// Deterministic sub-seed derivation, used to hand independent streams
/// to retries and parallel trials.
inline u64 derive_seed(u64 master, u64 tag, u64 index = 0) {
    return mix64(master ^ mix64(tag ^ 0xa076bc9d1e58f2c3ull) ^ (mix64(index) << 1));
}

}  // namespace gonal4

#endif  // GONAL4_RNG_HPP
