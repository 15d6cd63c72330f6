#include "maxdicut/rng.hpp"

#include "maxdicut/errors.hpp"

namespace maxdicut {

Rational rational_from_u64(std::uint64_t r) {
    const Rational two32(long{1} << 32);
    return Rational(static_cast<long>(r >> 32)) * two32 +
           Rational(static_cast<long>(r & 0xffffffffULL));
}

bool bernoulli_exact(const Rational& p, SplitMix64& rng) {
    if (p.is_negative() || p > Rational(1))
        throw BadParameterError("bernoulli probability outside [0, 1]");
    const Rational r = rational_from_u64(rng.next());
    const Rational two64 = Rational(long{1} << 32) * Rational(long{1} << 32);
    return r < p * two64;
}

long uniform_long(long lo, long hi, SplitMix64& rng) {
    if (lo > hi) throw BadParameterError("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng.next() % span);
}

}  // namespace maxdicut
