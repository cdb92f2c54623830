/**
 * Deterministic pseudo-random number generation.
 *
 * All randomness in the library flows through SplitMix64 so that results
 * are reproducible across platforms and standard-library versions
 * (std::uniform_int_distribution is not portable).
 */

#ifndef SHIFTLAB_PRNG_HPP
#define SHIFTLAB_PRNG_HPP

#include <cstdint>

namespace shiftlab {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform value in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi)
    {
        return lo + below(hi - lo + 1);
    }

  private:
    std::uint64_t state_;
};

/// Stateless mix of two seeds into one, used to derive retry seeds.
inline std::uint64_t mix_seeds(std::uint64_t a, std::uint64_t b)
{
    SplitMix64 g(a ^ (b * 0x9e3779b97f4a7c15ULL) ^ 0x2545f4914f6cdd1dULL);
    g.next();
    return g.next();
}

} // namespace shiftlab

#endif
