#ifndef STEGOTEXT_WORDLIST_HPP
#define STEGOTEXT_WORDLIST_HPP

#include <cctype>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "stegotext/bundle.hpp"
#include "stegotext/dictionary.hpp"
#include "stegotext/errors.hpp"
#include "stegotext/otp.hpp"
#include "stegotext/random.hpp"

namespace stegotext {
namespace wordlist {

/// One digit per hidden unit: the most significant digit of the zero-padded
/// three-digit unit (0-2 for the byte domain).
using Key = std::vector<int>;

using Bundle = StegoBundle<Key>;

struct Encoding {
    int key_digit;
    int word_length;
    char initial;  // 'z' marks the unit-0 sentinel
};

inline Encoding encode_unit(CipherUnit unit) {
    int n = unit;
    if (n == 0) return {0, 10, 'z'};  // digit sum 0 has no 1-based letter
    int k = n / 100;
    int mid = (n / 10) % 10;
    int r = n % 10;
    int len = mid < 6 ? mid + 10 : mid;
    int s = k + mid + r;
    return {k, len, static_cast<char>('a' + s - 1)};
}

inline Bundle hide(const CipherText& cipher, const Dictionary& dict, RandomSource& rng) {
    Bundle bundle;
    std::set<std::string> used;
    auto emit = [&](int length, std::optional<char> initial) {
        bool reused = false;
        const WordEntry& e = pick_word(dict, length, initial, false, used, rng, &reused);
        used.insert(e.word);
        if (reused) ++bundle.stats.reuse_warnings;
        bundle.stego_text += e.word;
        bundle.stego_text += '\n';
        ++bundle.stats.words_used;
    };
    for (CipherUnit unit : cipher) {
        Encoding enc = encode_unit(unit);
        emit(enc.word_length, enc.initial);
        bundle.stego_key.push_back(enc.key_digit);
    }
    for (std::size_t i = cipher.size(); i < 10; ++i) {
        // Padding words carry no key digit; any legitimate initial will do.
        emit(10, static_cast<char>('a' + rng.range(0, 18)));
    }
    bundle.cover_text = bundle.stego_text;  // words are unmodified: cover == stego
    bundle.stats.hidden_bytes = cipher.size();
    bundle.stats.cover_bytes = bundle.cover_text.size();
    return bundle;
}

inline CipherText seek(std::istream& stego, const Key& key) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(stego, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) words.push_back(line);
    }
    if (words.size() < key.size())
        throw MalformedStego("stego file has " + std::to_string(words.size()) +
                             " words but key has " + std::to_string(key.size()) + " digits");
    CipherText cipher;
    cipher.reserve(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        const std::string& word = words[i];
        int len = static_cast<int>(word.size());
        if (len < kMinWordLength || len > kMaxWordLength)
            throw MalformedStego("word " + std::to_string(i + 1) + ": length " +
                                 std::to_string(len) + " outside [6,15]");
        char initial = static_cast<char>(std::tolower(static_cast<unsigned char>(word.front())));
        if (initial == 'z') {
            if (len != 10)
                throw MalformedStego("word " + std::to_string(i + 1) +
                                     ": sentinel initial 'z' on a non-10-letter word");
            cipher.push_back(0);
            continue;
        }
        if (initial < 'a' || initial > 's')
            throw MalformedStego("word " + std::to_string(i + 1) + ": initial '" +
                                 std::string(1, initial) + "' outside a-s");
        int k = key[i];
        int l = len > 9 ? len - 10 : len;
        int s = initial - 'a' + 1;
        int r = s - (l + k);
        if (r < 0 || r > 9)
            throw MalformedStego("word " + std::to_string(i + 1) + ": decoded digit " +
                                 std::to_string(r) + " outside 0-9");
        int value = 100 * k + 10 * l + r;
        if (value > 255)
            throw MalformedStego("word " + std::to_string(i + 1) + ": reconstructed unit " +
                                 std::to_string(value) + " out of range");
        cipher.push_back(static_cast<CipherUnit>(value));
    }
    return cipher;
}

}  // namespace wordlist
}  // namespace stegotext

#endif
