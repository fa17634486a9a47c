#ifndef RFC_RNG_HPP
#define RFC_RNG_HPP

#include <cstdint>

// All randomness in the library flows through the SplitMix64 finalizer below,
// either as a stateless counter-based hash (field values, sample streams) or
// as a tiny sequential stream (GA internals). No OS entropy anywhere, so every
// result is a pure function of the seeds it was given.

namespace rfc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer (Vigna / Steele-Lea-Flood). Arithmetic mod 2^64.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Map a 64-bit word to [0,1) keeping the top 53 bits.
constexpr double to_u01(std::uint64_t v)
{
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

// Stateless 3-word hash; used wherever sample i of stream s must be
// reproducible independently of evaluation order.
constexpr std::uint64_t hash3(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    std::uint64_t s = mix64(seed ^ kGoldenGamma);
    s = mix64(s ^ (stream * kGoldenGamma + 1));
    s = mix64(s ^ (counter * kGoldenGamma + 2));
    return s;
}

constexpr double hash3_u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    return to_u01(hash3(seed, stream, counter));
}

// Fixed-increment sequential SplitMix64 stream for stateful consumers (GA).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    double next_u01() { return to_u01(next()); }

    // Uniform integer in [0, n). Modulo bias is < n/2^64, irrelevant here.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

} // namespace rfc

#endif
