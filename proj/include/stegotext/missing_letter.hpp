#ifndef STEGOTEXT_MISSING_LETTER_HPP
#define STEGOTEXT_MISSING_LETTER_HPP

#include <cassert>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stegotext/bundle.hpp"
#include "stegotext/dictionary.hpp"
#include "stegotext/errors.hpp"
#include "stegotext/otp.hpp"
#include "stegotext/random.hpp"

namespace stegotext {
namespace missing_letter {

struct PuzzleLine {
    std::string masked_word;  // 1 or 2 letters replaced by '?'
    std::string hint;         // non-empty only for single-'?' hint lines
    std::string source_word;
};

/// One flag per hidden unit: 0 for units < 100, 1 + least significant digit
/// for units >= 100.
using Key = std::vector<int>;

using Bundle = StegoBundle<Key>;

namespace detail {

inline std::string mask(const std::string& word, int pos1, int pos2 = 0) {
    std::string out = word;
    out[pos1 - 1] = '?';
    if (pos2) out[pos2 - 1] = '?';
    return out;
}

}  // namespace detail

inline std::pair<PuzzleLine, int> encode_unit(CipherUnit unit, const Dictionary& dict,
                                              RandomSource& rng,
                                              const std::set<std::string>& used = {},
                                              bool* reused = nullptr) {
    int n = unit;
    PuzzleLine line;
    int flag;
    if (n < 100) {
        flag = 0;
        int q = n / 10;
        int r = n % 10;
        int len = q < 6 ? 10 + q : q;
        if (r == 0) {
            const WordEntry& e = pick_word(dict, len, std::nullopt, true, used, rng, reused);
            line.source_word = e.word;
            line.hint = e.gloss;
            line.masked_word = detail::mask(e.word, rng.range(1, len));
        } else if (r <= q) {
            const WordEntry& e = pick_word(dict, len, std::nullopt, false, used, rng, reused);
            line.source_word = e.word;
            line.masked_word = detail::mask(e.word, r);
        } else {
            // Two misses: the second position's lower bound keeps it strictly
            // after the first so seek can identify which '?' carries r.
            int first = r - q;
            int p = q >= 6 ? rng.range(4, len) : rng.range(10, len);
            const WordEntry& e = pick_word(dict, len, std::nullopt, false, used, rng, reused);
            line.source_word = e.word;
            line.masked_word = detail::mask(e.word, first, p);
            assert(first < p);
        }
    } else {
        flag = 1 + n % 10;
        int q = n / 100;
        int r = (n / 10) % 10;
        int len = 10 + q;
        const WordEntry& e = pick_word(dict, len, std::nullopt, false, used, rng, reused);
        line.source_word = e.word;
        if (r == 0) {
            line.masked_word = detail::mask(e.word, rng.range(10, len));
        } else {
            line.masked_word = detail::mask(e.word, r);
        }
    }
    return {std::move(line), flag};
}

inline Bundle hide(const CipherText& cipher, const Dictionary& dict, RandomSource& rng) {
    Bundle bundle;
    std::set<std::string> used;
    for (CipherUnit unit : cipher) {
        bool reused = false;
        auto [line, flag] = encode_unit(unit, dict, rng, used, &reused);
        used.insert(line.source_word);
        if (reused) ++bundle.stats.reuse_warnings;
        bundle.stego_text += line.masked_word;
        if (!line.hint.empty()) bundle.stego_text += " (" + line.hint + ")";
        bundle.stego_text += '\n';
        bundle.cover_text += line.source_word;
        bundle.cover_text += '\n';
        bundle.stego_key.push_back(flag);
        ++bundle.stats.words_used;
    }
    // Stego files carry at least ten words regardless of message size.
    for (std::size_t i = cipher.size(); i < 10; ++i) {
        bool reused = false;
        const WordEntry& e = pick_word(dict, 10, std::nullopt, false, used, rng, &reused);
        used.insert(e.word);
        if (reused) ++bundle.stats.reuse_warnings;
        bundle.stego_text += detail::mask(e.word, rng.range(1, 10));
        bundle.stego_text += '\n';
        bundle.cover_text += e.word;
        bundle.cover_text += '\n';
        ++bundle.stats.words_used;
    }
    bundle.stats.hidden_bytes = cipher.size();
    bundle.stats.cover_bytes = bundle.cover_text.size();
    return bundle;
}

namespace detail {

struct ParsedLine {
    std::string word;
    bool has_hint = false;
};

inline std::vector<ParsedLine> parse_stego(std::istream& in) {
    std::vector<ParsedLine> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        ParsedLine pl;
        if (auto sp = raw.find(' '); sp != std::string::npos) {
            pl.word = raw.substr(0, sp);
            pl.has_hint = raw.find('(', sp) != std::string::npos;
        } else {
            pl.word = raw;
        }
        lines.push_back(std::move(pl));
    }
    return lines;
}

inline std::vector<int> question_positions(const std::string& word) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == '?') pos.push_back(static_cast<int>(i) + 1);
    return pos;
}

}  // namespace detail

inline CipherText seek(std::istream& stego, const Key& key) {
    auto lines = detail::parse_stego(stego);
    if (lines.size() < key.size())
        throw MalformedStego("stego file has " + std::to_string(lines.size()) +
                             " lines but key has " + std::to_string(key.size()) + " flags");
    CipherText cipher;
    cipher.reserve(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        const auto& pl = lines[i];
        auto qs = detail::question_positions(pl.word);
        if (qs.empty() || qs.size() > 2)
            throw MalformedStego("line " + std::to_string(i + 1) + ": expected 1 or 2 '?', got " +
                                 std::to_string(qs.size()));
        if (pl.has_hint && qs.size() == 2)
            throw MalformedStego("line " + std::to_string(i + 1) + ": hint on a two-'?' line");
        int k = key[i];
        int value;
        if (k == 0) {
            int l = static_cast<int>(pl.word.size());
            if (l > 9) l -= 10;
            int r;
            if (pl.has_hint)
                r = 0;
            else if (qs.size() == 2)
                r = l + qs[0];
            else
                r = qs[0];
            value = 10 * l + r;
        } else {
            int a = k - 1;
            int l = static_cast<int>(pl.word.size()) - 10;
            int r = qs[0];
            if (r > 9) r = 0;
            value = 100 * l + 10 * r + a;
        }
        if (value < 0 || value > 255)
            throw MalformedStego("line " + std::to_string(i + 1) + ": reconstructed unit " +
                                 std::to_string(value) + " out of range");
        cipher.push_back(static_cast<CipherUnit>(value));
    }
    return cipher;
}

}  // namespace missing_letter
}  // namespace stegotext

#endif
