#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace lpp {

// Lattice site in the first quadrant. |z| denotes the L1 norm x + y.
struct Site {
    std::int64_t x = 0;
    std::int64_t y = 0;

    std::int64_t l1() const { return x + y; }
    double angle() const { return std::atan2(static_cast<double>(y), static_cast<double>(x)); }

    friend bool operator==(const Site&, const Site&) = default;
};

// Seed + rate scale defining a reproducible random environment. The same
// (seed, scale, site) triple always yields the same time, with no stream
// state, so any site is addressable in O(1).
struct EnvSpec {
    std::uint64_t seed = 0;
    double scale = 1.0;  // lambda; power-of-two values scale times exactly
};

namespace detail {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xBF58476D1CE4E5B9ULL;
    v ^= v >> 27;
    v *= 0x94D049BB133111EBULL;
    v ^= v >> 31;
    return v;
}

inline constexpr std::uint64_t kXMul = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kYMul = 0xC2B2AE3D27D4EB4FULL;
inline constexpr std::uint64_t kReplicateTag = 0xA3C59AC2F0516D4DULL;

constexpr std::uint64_t site_hash(std::uint64_t seed, std::uint64_t x, std::uint64_t y) {
    std::uint64_t h = mix64(seed ^ (x * kXMul));
    return mix64(h ^ (y * kYMul));
}

// Uniform in [0, 1 - 2^-53] from the top 53 bits.
constexpr double unit_from_bits(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Exponential time at a site: scale * (-log(1 - u)) with u hashed from
// (seed, x, y). Pure function of its inputs, strictly positive and finite.
inline double sample_time(const EnvSpec& spec, Site z) {
    const double u = detail::unit_from_bits(detail::site_hash(
        spec.seed, static_cast<std::uint64_t>(z.x), static_cast<std::uint64_t>(z.y)));
    double t = -std::log1p(-u);
    if (t <= 0.0) t = std::numeric_limits<double>::denorm_min();  // u == 0
    return spec.scale * t;
}

// Seed for replicate r of an experiment, domain-separated from site hashing.
inline std::uint64_t replicate_seed(std::uint64_t seed_base, std::uint64_t r) {
    return detail::mix64(detail::mix64(seed_base ^ detail::kReplicateTag) ^ (r * detail::kXMul));
}

}  // namespace lpp
