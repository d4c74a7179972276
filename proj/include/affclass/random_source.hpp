#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "affclass/rational.hpp"

namespace affclass {

/// Deterministic random scalars for tests and sampling commands.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a seed identifies the exact stream on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : m_seed(seed), m_engine(seed) {}

    std::uint64_t seed() const { return m_seed; }

    std::uint64_t next_u64() { return m_engine(); }

    /// Uniform integer in [lo, hi] via modulo reduction (deterministic
    /// across platforms, unlike std::uniform_int_distribution).
    long int_in(long lo, long hi);

    /// Rational with numerator in [-10, 10] and denominator in [1, 10].
    Rat rat();

    /// Same distribution as rat(), redrawn until nonzero.
    Rat nonzero_rat();

    /// Same distribution as rat(), redrawn until positive.
    Rat positive_rat();

    /// Same distribution as rat(), redrawn while the value is in `avoid`.
    Rat rat_excluding(const std::vector<Rat>& avoid);

private:
    std::uint64_t m_seed;
    std::mt19937_64 m_engine;
};

} // namespace affclass
