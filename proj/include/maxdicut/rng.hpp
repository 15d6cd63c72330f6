#pragma once

#include <cstdint>

#include "maxdicut/rational.hpp"

namespace maxdicut {

// The library's only randomness source. A fixed algorithm (SplitMix64) so a
// seed yields the same stream on every platform; std:: distributions are
// avoided because their outputs are implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// The 64-bit word as an exact Rational (values up to 2^64 - 1).
Rational rational_from_u64(std::uint64_t r);

// True with probability exactly p in [0, 1]: draws one word r and tests
// r / 2^64 < p in exact arithmetic. Always consumes exactly one word.
bool bernoulli_exact(const Rational& p, SplitMix64& rng);

// Integer in [lo, hi] by modulo reduction; the tiny bias is irrelevant for
// corpus generation and the result is platform-stable.
long uniform_long(long lo, long hi, SplitMix64& rng);

}  // namespace maxdicut
