#pragma once

#include <cstdint>

namespace linarb {

/// SplitMix64. Seed 1234567 yields 6457827717110365317,
/// 3203168211198807973, 9817491932198370423, ... (see README).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Value in [0, bound): high 64 bits of next() * bound. bound > 0.
    std::uint64_t uniform_below(std::uint64_t bound)
    {
        __extension__ using Wide = unsigned __int128;
        return static_cast<std::uint64_t>((static_cast<Wide>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace linarb
