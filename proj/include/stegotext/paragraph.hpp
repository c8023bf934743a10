#ifndef STEGOTEXT_PARAGRAPH_HPP
#define STEGOTEXT_PARAGRAPH_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "stegotext/bundle.hpp"
#include "stegotext/errors.hpp"
#include "stegotext/otp.hpp"

namespace stegotext {
namespace paragraph {

/// One lowercase letter per hidden bit: the start letter of the consumed
/// token for bit 0, the end letter for bit 1.
using Key = std::string;

using Bundle = StegoBundle<Key>;

struct CoverToken {
    std::string raw;
    char start = '\0';  // first alphabetic character, lowercased
    char end = '\0';    // last alphabetic character, lowercased
    bool usable = false;
};

using BitStream = std::vector<int>;

inline BitStream to_bits(const CipherText& cipher) {
    BitStream bits;
    bits.reserve(cipher.size() * 8);
    for (CipherUnit unit : cipher)
        for (int b = 7; b >= 0; --b) bits.push_back((unit >> b) & 1);
    return bits;
}

inline CipherText from_bits(const BitStream& bits) {
    if (bits.size() % 8 != 0) throw BadBitCount(bits.size());
    CipherText cipher;
    cipher.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        int unit = 0;
        for (int b = 0; b < 8; ++b) unit = unit << 1 | bits[i + b];
        cipher.push_back(static_cast<CipherUnit>(unit));
    }
    return cipher;
}

/// Whitespace-split tokens; a token is usable when its first and last
/// alphabetic characters differ (single-letter and letterless tokens are
/// skipped during embedding).
inline std::vector<CoverToken> tokenize(std::string_view cover) {
    std::vector<CoverToken> tokens;
    std::size_t i = 0;
    while (i < cover.size()) {
        while (i < cover.size() && std::isspace(static_cast<unsigned char>(cover[i]))) ++i;
        std::size_t begin = i;
        while (i < cover.size() && !std::isspace(static_cast<unsigned char>(cover[i]))) ++i;
        if (i == begin) break;
        CoverToken tok;
        tok.raw = std::string(cover.substr(begin, i - begin));
        for (char c : tok.raw) {
            if (std::isalpha(static_cast<unsigned char>(c))) {
                char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                if (!tok.start) tok.start = lc;
                tok.end = lc;
            }
        }
        tok.usable = tok.start && tok.start != tok.end;
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

inline Bundle hide(const CipherText& cipher, std::string_view cover) {
    BitStream bits = to_bits(cipher);
    auto tokens = tokenize(cover);

    Bundle bundle;
    std::size_t next = 0;
    for (int bit : bits) {
        while (next < tokens.size() && !tokens[next].usable) ++next;
        if (next == tokens.size()) {
            std::size_t usable = 0;
            for (const auto& t : tokens) usable += t.usable;
            throw CoverTooShort(bits.size(), usable);
        }
        bundle.stego_key += bit == 0 ? tokens[next].start : tokens[next].end;
        ++next;
    }
    // The stego file is the cover verbatim; nothing in it changes.
    bundle.stego_text = std::string(cover);
    bundle.cover_text = std::string(cover);
    bundle.stats.hidden_bytes = cipher.size();
    bundle.stats.cover_bytes = cover.size();
    bundle.stats.words_used = bits.size();
    return bundle;
}

inline CipherText seek(std::string_view stego, const Key& key) {
    auto tokens = tokenize(stego);
    BitStream bits;
    bits.reserve(key.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(key[i])));
        while (next < tokens.size() && !tokens[next].usable) ++next;
        if (next == tokens.size()) {
            std::size_t usable = 0;
            for (const auto& t : tokens) usable += t.usable;
            throw CoverTooShort(key.size(), usable);
        }
        if (c == tokens[next].start)
            bits.push_back(0);
        else if (c == tokens[next].end)
            bits.push_back(1);
        else
            throw KeyMismatch(i);
        ++next;
    }
    return from_bits(bits);
}

}  // namespace paragraph
}  // namespace stegotext

#endif
