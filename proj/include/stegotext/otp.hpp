#ifndef STEGOTEXT_OTP_HPP
#define STEGOTEXT_OTP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stegotext/errors.hpp"
#include "stegotext/random.hpp"

namespace stegotext {

using MessageBytes = std::vector<std::uint8_t>;
using OneTimeKey = std::vector<std::uint8_t>;
using CipherUnit = std::uint8_t;
using CipherText = std::vector<CipherUnit>;

/// Sum of squared base-10 digits of r. Max over [0,255] is 163 (r=199).
inline int digit_square_sum(int r) {
    int s = 0;
    for (; r > 0; r /= 10) {
        int d = r % 10;
        s += d * d;
    }
    return s;
}

namespace detail {

inline std::uint8_t scramble(std::uint8_t n, std::uint8_t r) {
    int s = digit_square_sum(r);
    int x = s / 10;
    int y = s % 10;
    return static_cast<std::uint8_t>(((n - x * y + r) % 256 + 256) % 256);
}

inline std::uint8_t unscramble(std::uint8_t e, std::uint8_t r) {
    int s = digit_square_sum(r);
    int x = s / 10;
    int y = s % 10;
    return static_cast<std::uint8_t>(((e - r + x * y) % 256 + 256) % 256);
}

}  // namespace detail

/// One-time-pad scramble. Key units are drawn from a 1000-slot pool of random
/// bytes; each drawn slot is refilled before the next draw. Key and cipher
/// have exactly the message's length.
inline std::pair<CipherText, OneTimeKey> encipher(const MessageBytes& message,
                                                  RandomSource& rng) {
    std::vector<std::uint8_t> pool(1000);
    for (auto& slot : pool) slot = rng.byte();

    CipherText cipher;
    OneTimeKey key;
    cipher.reserve(message.size());
    key.reserve(message.size());
    for (std::uint8_t n : message) {
        std::size_t i = rng.index(pool.size());
        std::uint8_t r = pool[i];
        pool[i] = rng.byte();
        key.push_back(r);
        cipher.push_back(detail::scramble(n, r));
    }
    return {std::move(cipher), std::move(key)};
}

inline MessageBytes decipher(const CipherText& cipher, const OneTimeKey& key) {
    if (cipher.size() != key.size()) throw LengthMismatch(cipher.size(), key.size());
    MessageBytes message;
    message.reserve(cipher.size());
    for (std::size_t i = 0; i < cipher.size(); ++i)
        message.push_back(detail::unscramble(cipher[i], key[i]));
    return message;
}

}  // namespace stegotext

#endif
