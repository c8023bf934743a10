#ifndef STEGOTEXT_RANDOM_HPP
#define STEGOTEXT_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>

namespace stegotext {

/// Injectable randomness. Default-constructed sources draw their seed material
/// from the OS entropy pool; seeded sources are deterministic for tests and
/// the --seed flag.
class RandomSource {
public:
    RandomSource() : engine_(entropy_seed()) {}
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint8_t byte() {
        return static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 255)(engine_));
    }

    /// Uniform integer in [0, n), n >= 1.
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    /// Uniform integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

private:
    static std::uint64_t entropy_seed() {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }

    std::mt19937_64 engine_;
};

inline RandomSource make_random(std::optional<std::uint64_t> seed) {
    return seed ? RandomSource(*seed) : RandomSource();
}

}  // namespace stegotext

#endif
