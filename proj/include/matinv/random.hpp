#pragma once

#include <cstdint>
#include <random>

#include "matinv/scalar.hpp"

namespace matinv {

/// Deterministic random stream. Sub-streams are derived from (seed, index)
/// so independent trials never share state and every run replays exactly.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    RandomStream substream(std::uint64_t index) const {
        std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                          0x6d617469u};
        std::uint64_t derived = 0;
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        derived = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
        return RandomStream(derived);
    }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    bool coin() { return uniform(0, 1) == 1; }

    /// p/q with |p| <= bound and 1 <= q <= bound.
    Rational rational(long bound) {
        Rational q(uniform(-bound, bound), uniform(1, bound));
        q.canonicalize();
        return q;
    }

    /// Gaussian rational with independently drawn parts; about one draw in
    /// four is real so that real-only fast paths and mixed data both occur.
    GaussianRational gaussian(long bound) {
        Rational re = rational(bound);
        if (uniform(0, 3) == 0) return GaussianRational(std::move(re));
        return GaussianRational(std::move(re), rational(bound));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace matinv
