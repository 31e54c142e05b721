#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "logtangent/rat.hpp"

namespace logtangent {

/// Seeded deterministic sampler for rationals of bounded height. All
/// "generic" choices in the library draw from an explicitly passed Rng so
/// runs are reproducible; results do not depend on platform distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform-ish integer in [lo, hi] (modulo reduction; bias is irrelevant
    /// for genericity sampling and keeps the stream platform-independent).
    long long int_in(long long lo, long long hi);

    /// Rational with |numerator| <= height, 1 <= denominator <= height.
    Rat rational(long long height);
    Rat nonzero_rational(long long height);

    std::vector<Rat> rational_vector(std::size_t len, long long height);
    /// Vector that is not identically zero.
    std::vector<Rat> nonzero_vector(std::size_t len, long long height);

  private:
    std::mt19937_64 eng_;
};

inline constexpr long long kDefaultHeight = 100;
inline constexpr long long kWitnessHeight = 20;
inline constexpr std::size_t kWitnessBudget = 10000;

}  // namespace logtangent
