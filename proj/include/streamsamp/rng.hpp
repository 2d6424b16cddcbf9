#ifndef STREAMSAMP_RNG_HPP
#define STREAMSAMP_RNG_HPP

#include <array>
#include <cstdint>

namespace streamsamp {

/// SplitMix64 finalizer; bijective 64-bit mixer used for seeding.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ with SplitMix64 seeding. Hand-rolled so that output is
/// byte-identical across platforms and standard-library versions; the
/// std:: distributions make no such guarantee.
///
/// The (seed, stream) constructor derives an independent substream per
/// counter value, so replicate r of a Monte Carlo run can use
/// Rng(seed, r) and the merged result does not depend on execution
/// order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = mix64(seed) ^ mix64(stream ^ 0x5bf0363546e57ed1ULL);
        for (auto& word : state_) {
            x = mix64(x);
            word = x;
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on (0,1] with 53-bit resolution. The half-open side is
    /// chosen so that comparing u <= threshold makes threshold 0 an
    /// impossible event and threshold 1 a certain one.
    double next_unit() noexcept {
        const std::uint64_t k = next_u64() >> 11; // top 53 bits
        return static_cast<double>(k + 1) * 0x1.0p-53;
    }

    /// Uniform on [0,1).
    double next_unit_co() noexcept { return 1.0 - next_unit(); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) noexcept {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace streamsamp

#endif // STREAMSAMP_RNG_HPP
