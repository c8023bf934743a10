#ifndef STEGOTEXT_ERRORS_HPP
#define STEGOTEXT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stegotext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t cipher_len, std::size_t key_len)
        : Error("cipher/key length mismatch: cipher has " + std::to_string(cipher_len) +
                " units, key has " + std::to_string(key_len)),
          cipher_len(cipher_len), key_len(key_len) {}
    std::size_t cipher_len;
    std::size_t key_len;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

struct EmptyBucket : Error {
    EmptyBucket(int length, char initial, bool needs_gloss)
        : Error(std::string("no dictionary word of length ") + std::to_string(length) +
                (initial ? std::string(" starting with '") + initial + "'" : std::string()) +
                (needs_gloss ? " with a gloss" : "")),
          length(length), initial(initial), needs_gloss(needs_gloss) {}
    int length;
    char initial;  // 0 when any initial qualifies
    bool needs_gloss;
};

struct MalformedStego : Error {
    using Error::Error;
};

struct CoverTooShort : Error {
    CoverTooShort(std::size_t needed, std::size_t found)
        : Error("cover has " + std::to_string(found) + " usable tokens, need " +
                std::to_string(needed)),
          needed_usable(needed), found_usable(found) {}
    std::size_t needed_usable;
    std::size_t found_usable;
};

struct KeyMismatch : Error {
    explicit KeyMismatch(std::size_t token_index)
        : Error("stego key letter at index " + std::to_string(token_index) +
                " matches neither start nor end letter of the token"),
          token_index(token_index) {}
    std::size_t token_index;
};

struct BadBitCount : Error {
    explicit BadBitCount(std::size_t n)
        : Error("bit stream length " + std::to_string(n) + " is not a multiple of 8") {}
};

struct ZeroCover : Error {
    ZeroCover() : Error("cover size is zero bytes") {}
};

struct LineCountMismatch : Error {
    LineCountMismatch(std::size_t cover_lines, std::size_t stego_lines)
        : Error("cover has " + std::to_string(cover_lines) + " lines, stego has " +
                std::to_string(stego_lines)) {}
};

}  // namespace stegotext

#endif
