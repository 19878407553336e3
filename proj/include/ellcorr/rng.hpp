#pragma once

#include <complex>
#include <cstdint>

namespace ellcorr {

/// SplitMix64: the suite RNG. Counter-based and splittable, so reports are
/// reproducible bit-for-bit across platforms (std:: distributions are not).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform over the square [-r, r]^2 in the complex plane.
    std::complex<double> complex_in_square(double r) {
        double re = uniform(-r, r);
        double im = uniform(-r, r);
        return {re, im};
    }

    /// Derive an independent stream for a tagged sub-task (rows, sections).
    static SplitMix64 split(std::uint64_t seed, std::uint64_t tag) {
        SplitMix64 mixer(seed ^ (0xA5A5A5A55A5A5A5AULL + tag * 0x9E3779B97F4A7C15ULL));
        return SplitMix64(mixer.next_u64());
    }

  private:
    std::uint64_t state_;
};

} // namespace ellcorr
