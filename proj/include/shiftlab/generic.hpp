/**
 * Seeded stand-ins for transcendental generic matrices.
 *
 * A GenericMatrixSource materializes an invertible n×n matrix over F_p from
 * a PRNG seed; the same (p, seed, n) always reproduces the same matrix.
 * stable_generic_run executes a computation under two independent seeds and
 * accepts the value only when both agree, retrying with fresh seed pairs
 * otherwise.  A structural violation that is generically impossible
 * (ClosureViolation) counts as a disagreement.
 */

#ifndef SHIFTLAB_GENERIC_HPP
#define SHIFTLAB_GENERIC_HPP

#include <cstdint>
#include <utility>

#include "errors.hpp"
#include "fp.hpp"
#include "prng.hpp"

namespace shiftlab {

class GenericMatrixSource {
  public:
    GenericMatrixSource(std::uint64_t prime, std::uint64_t seed, int n)
        : F_(prime), seed_(seed), n_(n), A_(F_, static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(n))
    {
        SplitMix64 rng(seed ^ 0x5eedu);
        for (int attempt = 0;; ++attempt) {
            for (std::size_t i = 0; i < A_.rows(); ++i)
                for (std::size_t j = 0; j < A_.cols(); ++j)
                    A_.at(i, j) = static_cast<fp_t>(rng.range(1, prime - 1));
            if (n == 0 || rank(A_) == static_cast<std::size_t>(n))
                break;
            if (attempt > 64)
                throw GenericInstability("GenericMatrixSource: cannot draw invertible matrix");
        }
    }

    const PrimeField& field() const { return F_; }
    std::uint64_t prime() const { return F_.prime(); }
    std::uint64_t seed() const { return seed_; }
    int size() const { return n_; }
    const FpMatrix& matrix() const { return A_; }

  private:
    PrimeField F_;
    std::uint64_t seed_;
    int n_;
    FpMatrix A_;
};

struct GenericConfig {
    std::uint64_t prime = (1ULL << 31) - 1;
    std::uint64_t seed1 = 20251;
    std::uint64_t seed2 = 40507;
    int max_retries = 3;
};

template <typename T> struct StableValue {
    T value;
    std::uint64_t prime;
    std::pair<std::uint64_t, std::uint64_t> seeds;
    bool stable = true;
    int attempts = 1;
};

/**
 * Run `compute` (a pure function of a GenericMatrixSource) for matrices of
 * size n under two seeds; equal values are accepted as the generic answer.
 */
template <typename Fn>
auto stable_generic_run(int n, const GenericConfig& cfg, Fn&& compute)
    -> StableValue<decltype(compute(std::declval<const GenericMatrixSource&>()))>
{
    using T = decltype(compute(std::declval<const GenericMatrixSource&>()));
    std::uint64_t s1 = cfg.seed1, s2 = cfg.seed2;
    for (int attempt = 1; attempt <= cfg.max_retries + 1; ++attempt) {
        bool violated = false;
        T v1{}, v2{};
        try {
            GenericMatrixSource src1(cfg.prime, s1, n);
            v1 = compute(src1);
            GenericMatrixSource src2(cfg.prime, s2, n);
            v2 = compute(src2);
        } catch (const ClosureViolation&) {
            violated = true;
        }
        if (!violated && v1 == v2)
            return StableValue<T>{std::move(v1), cfg.prime, {s1, s2}, true, attempt};
        s1 = mix_seeds(s1, static_cast<std::uint64_t>(attempt) * 2 + 1);
        s2 = mix_seeds(s2, static_cast<std::uint64_t>(attempt) * 2 + 2);
    }
    throw GenericInstability("stable_generic_run: seeds disagree after retries");
}

} // namespace shiftlab

#endif
