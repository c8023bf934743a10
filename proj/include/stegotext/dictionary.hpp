#ifndef STEGOTEXT_DICTIONARY_HPP
#define STEGOTEXT_DICTIONARY_HPP

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stegotext/errors.hpp"
#include "stegotext/random.hpp"

namespace stegotext {

inline constexpr int kMinWordLength = 6;
inline constexpr int kMaxWordLength = 15;

struct WordEntry {
    std::string word;
    std::string gloss;  // empty when the entry has no hint text

    bool has_gloss() const { return !gloss.empty(); }
};

inline char initial_of(const std::string& word) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(word.front())));
}

/// Immutable word store bucketed by length and by (length, initial letter).
/// Entries are 6-15 letters, pure a-z/A-Z; glosses double as puzzle hints.
class Dictionary {
public:
    const std::vector<WordEntry>& entries() const { return entries_; }

    std::vector<const WordEntry*> by_length(int length) const {
        return collect(by_length_, length);
    }

    std::vector<const WordEntry*> by_length_and_initial(int length, char initial) const {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(initial)));
        return collect(by_length_and_initial_, std::make_pair(length, c));
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    static Dictionary load(std::istream& in);

private:
    template <typename Map, typename Key>
    std::vector<const WordEntry*> collect(const Map& map, const Key& key) const {
        std::vector<const WordEntry*> out;
        if (auto it = map.find(key); it != map.end())
            for (std::size_t idx : it->second) out.push_back(&entries_[idx]);
        return out;
    }

    std::vector<WordEntry> entries_;
    std::map<int, std::vector<std::size_t>> by_length_;
    std::map<std::pair<int, char>, std::vector<std::size_t>> by_length_and_initial_;
};

inline Dictionary Dictionary::load(std::istream& in) {
    Dictionary dict;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        std::string word = line;
        std::string gloss;
        if (auto tab = line.find('\t'); tab != std::string::npos) {
            word = line.substr(0, tab);
            gloss = line.substr(tab + 1);
        }
        if (word.empty()) throw ParseError(lineno, "empty word");
        for (char c : word)
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw ParseError(lineno, "word contains non-letter character: \"" + word + "\"");
        int len = static_cast<int>(word.size());
        if (len < kMinWordLength || len > kMaxWordLength)
            throw ParseError(lineno, "word length " + std::to_string(len) +
                                         " outside [6,15]: \"" + word + "\"");
        if (!gloss.empty() &&
            gloss.find_first_of("()\n") != std::string::npos)
            throw ParseError(lineno, "gloss contains parentheses or newline");

        if (!seen.insert(word).second) continue;  // keep first gloss
        std::size_t idx = dict.entries_.size();
        dict.entries_.push_back({word, gloss});
        dict.by_length_[len].push_back(idx);
        dict.by_length_and_initial_[{len, initial_of(word)}].push_back(idx);
    }
    return dict;
}

/// Uniform draw from the (length[, initial]) bucket, optionally requiring a
/// gloss. Words already in `used` are avoided until the bucket is exhausted,
/// then reused.
inline const WordEntry& pick_word(const Dictionary& dict, int length,
                                  std::optional<char> initial, bool needs_gloss,
                                  const std::set<std::string>& used, RandomSource& rng,
                                  bool* reused = nullptr) {
    std::vector<const WordEntry*> bucket =
        initial ? dict.by_length_and_initial(length, *initial) : dict.by_length(length);
    if (needs_gloss) {
        std::erase_if(bucket, [](const WordEntry* e) { return !e->has_gloss(); });
    }
    if (bucket.empty()) throw EmptyBucket(length, initial.value_or('\0'), needs_gloss);

    std::vector<const WordEntry*> fresh;
    for (const WordEntry* e : bucket)
        if (!used.count(e->word)) fresh.push_back(e);
    if (reused) *reused = fresh.empty();
    const auto& pool = fresh.empty() ? bucket : fresh;
    return *pool[rng.index(pool.size())];
}

enum class StegoMethod { missing_letter, wordlist, paragraph };

struct MissingBucket {
    int length;
    char initial;      // 0 = any initial
    bool needs_gloss;
};

struct CoverageReport {
    std::vector<MissingBucket> missing;
    bool ok() const { return missing.empty(); }
};

namespace detail {

/// Every (word length, initial letter) bucket some cipher unit can demand
/// from the wordlist method, by direct enumeration of the unit domain.
inline std::set<std::pair<int, char>> wordlist_required_buckets() {
    std::set<std::pair<int, char>> req;
    req.insert({10, 'z'});  // sentinel for unit 0
    for (int n = 1; n <= 255; ++n) {
        int k = n / 100;
        int mid = (n / 10) % 10;
        int r = n % 10;
        int len = mid < 6 ? mid + 10 : mid;
        int s = k + mid + r;
        req.insert({len, static_cast<char>('a' + s - 1)});
    }
    return req;
}

}  // namespace detail

inline CoverageReport audit_coverage(const Dictionary& dict, StegoMethod method) {
    CoverageReport report;
    if (method == StegoMethod::wordlist) {
        for (auto [len, initial] : detail::wordlist_required_buckets())
            if (dict.by_length_and_initial(len, initial).empty())
                report.missing.push_back({len, initial, false});
    } else {
        for (int len = kMinWordLength; len <= kMaxWordLength; ++len) {
            auto bucket = dict.by_length(len);
            if (bucket.empty()) {
                report.missing.push_back({len, '\0', false});
                continue;
            }
            bool glossed = std::any_of(bucket.begin(), bucket.end(),
                                       [](const WordEntry* e) { return e->has_gloss(); });
            if (!glossed) report.missing.push_back({len, '\0', true});
        }
    }
    return report;
}

}  // namespace stegotext

#endif
