#ifndef STEGOTEXT_BENCH_HPP
#define STEGOTEXT_BENCH_HPP

#include <array>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stegotext/dictionary.hpp"
#include "stegotext/metrics.hpp"
#include "stegotext/missing_letter.hpp"
#include "stegotext/otp.hpp"
#include "stegotext/paragraph.hpp"
#include "stegotext/random.hpp"
#include "stegotext/wordlist.hpp"

namespace stegotext {
namespace bench {

/// Ten embedded-data samples of 3, 6, 12, 24, 50, 63, 100, 202, 349 and 508
/// bytes for the capacity matrix.
inline const std::array<std::string_view, 10>& capacity_samples() {
    static const std::array<std::string_view, 10> samples = {
        "Ego",
        "Minute",
        "Hello World!",
        "Failure is never final !",
        "Smile is an inexpensive way to improve your looks.",
        "Its not the load that breaks you down its the way you carry it.",
        "Don't find hundred reasons why you can't do a thing, but just find one "
        "reason why you can and do it.",
        "Tide recedes and leaves bright shells on the sands\n"
        "Sun sets but its warmth lingers over the land\n"
        "Music stops and yet it echoes on in a sweet refrain\n"
        "For every joy that passes something beautiful remains",
        "The harbour town woke slowly under a grey morning sky. Fishing boats "
        "rocked gently against their moorings while gulls wheeled and cried "
        "above the quay. An old man walked the length of the sea wall, pausing "
        "now and then to watch the tide push ribbons of foam across the sands. "
        "Behind him the narrow streets began to stir as the old town came to life.",
        "The lighthouse stood on a spur of black rock at the northern edge of "
        "the bay. Its keeper had retired years before, and the lamp now turned "
        "by itself, patient and automatic, sweeping the water every evening "
        "without complaint. Locals said the building remembered every storm it "
        "had outlived. On clear days the visitors climbed the spiral stairs to "
        "the gallery and looked across the channel toward the faint blue line "
        "of the far shore, and at night the beam swung out over the dark water, "
        "steady as a heartbeat.",
    };
    return samples;
}

/// Ten short samples for the missing-letter similarity table.
inline const std::array<std::string_view, 10>& similarity_samples() {
    static const std::array<std::string_view, 10> samples = {
        "A",           "try",           "smile",           "silence",
        "Happiness",   "possibility",   "Steganography",   "glimmer of hope",
        "the art of living", "outstanding success",
    };
    return samples;
}

/// Average percentage capacities reported for other published methods,
/// quoted as static reference values; not recomputed here.
struct ReportedCapacity {
    std::string_view name;
    double percent;
};

inline const std::array<ReportedCapacity, 6>& reported_capacities() {
    static const std::array<ReportedCapacity, 6> values = {{
        {"White Steg", 1.874},
        {"SMS Texting", 1.71},
        {"Feature Coding", 1.479},
        {"Word Map", 1.464},
        {"Spam Text", 1.164},
        {"Word Shift", 1.03},
    }};
    return values;
}

struct Result {
    std::vector<double> missing_letter_capacity;  // one cell per sample
    std::vector<double> wordlist_capacity;
    std::vector<double> paragraph_capacity;
    double missing_letter_avg = 0;
    double wordlist_avg = 0;
    double paragraph_avg = 0;
    std::vector<double> missing_letter_similarity;  // per short sample
    double missing_letter_similarity_avg = 0;
};

namespace detail {

inline MessageBytes to_bytes(std::string_view text) {
    return MessageBytes(text.begin(), text.end());
}

/// Smallest prefix of the (repeated) corpus holding `needed` usable tokens,
/// cut right after the last one.
inline std::string cover_for(const std::string& corpus, std::size_t needed) {
    std::string text;
    while (true) {
        auto tokens = paragraph::tokenize(text);
        std::size_t usable = 0;
        for (const auto& t : tokens) usable += t.usable;
        if (usable >= needed) break;
        if (!text.empty() && text.back() != '\n') text += '\n';
        text += corpus;
    }
    if (needed == 0) return corpus;
    auto tokens = paragraph::tokenize(text);
    std::size_t usable = 0;
    std::size_t end = text.size();
    std::size_t pos = 0;
    for (const auto& t : tokens) {
        pos = text.find(t.raw, pos);
        pos += t.raw.size();
        if (t.usable && ++usable == needed) {
            end = pos;
            break;
        }
    }
    return text.substr(0, end);
}

inline double mean(const std::vector<double>& v) {
    double sum = 0;
    for (double x : v) sum += x;
    return v.empty() ? 0 : sum / v.size();
}

}  // namespace detail

inline Result run(const Dictionary& dict, const std::string& cover_corpus,
                  std::optional<std::uint64_t> seed) {
    Result result;
    std::uint64_t base = seed.value_or(0);
    for (std::size_t i = 0; i < capacity_samples().size(); ++i) {
        MessageBytes msg = detail::to_bytes(capacity_samples()[i]);
        RandomSource rng = seed ? RandomSource(base + i) : RandomSource();
        auto [cipher, key] = encipher(msg, rng);

        auto ml = missing_letter::hide(cipher, dict, rng);
        result.missing_letter_capacity.push_back(
            metrics::capacity_percent(ml.stats.hidden_bytes, ml.stats.cover_bytes));

        auto wl = wordlist::hide(cipher, dict, rng);
        result.wordlist_capacity.push_back(
            metrics::capacity_percent(wl.stats.hidden_bytes, wl.stats.cover_bytes));

        std::string cover = detail::cover_for(cover_corpus, cipher.size() * 8);
        auto pg = paragraph::hide(cipher, cover);
        result.paragraph_capacity.push_back(
            metrics::capacity_percent(pg.stats.hidden_bytes, pg.stats.cover_bytes));
    }
    result.missing_letter_avg = detail::mean(result.missing_letter_capacity);
    result.wordlist_avg = detail::mean(result.wordlist_capacity);
    result.paragraph_avg = detail::mean(result.paragraph_capacity);

    for (std::size_t i = 0; i < similarity_samples().size(); ++i) {
        MessageBytes msg = detail::to_bytes(similarity_samples()[i]);
        RandomSource rng = seed ? RandomSource(base + 100 + i) : RandomSource();
        auto [cipher, key] = encipher(msg, rng);
        auto ml = missing_letter::hide(cipher, dict, rng);
        std::istringstream cover(ml.cover_text), stego(ml.stego_text);
        auto report = metrics::stego_similarity_report(cover, stego);
        result.missing_letter_similarity.push_back(report.average);
    }
    result.missing_letter_similarity_avg = detail::mean(result.missing_letter_similarity);
    return result;
}

inline std::string format(const Result& r, bool markdown) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    const char* sep = markdown ? " | " : "\t";
    auto row = [&](std::string_view name, const std::vector<double>& cells) {
        if (markdown) out << "| ";
        out << name;
        for (double c : cells) out << sep << c;
        if (markdown) out << " |";
        out << '\n';
    };
    if (markdown) {
        out << "| method | I | II | III | IV | V | VI | VII | VIII | IX | X |\n";
        out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    } else {
        out << "method\tI\tII\tIII\tIV\tV\tVI\tVII\tVIII\tIX\tX\n";
    }
    row("missing-letter", r.missing_letter_capacity);
    row("wordlist", r.wordlist_capacity);
    row("paragraph", r.paragraph_capacity);
    out << '\n';
    out << "average capacity (this run):\n";
    out << "missing-letter" << sep << r.missing_letter_avg << '\n';
    out << "wordlist" << sep << r.wordlist_avg << '\n';
    out << "paragraph" << sep << r.paragraph_avg << '\n';
    out << "reference averages (reported, not recomputed):\n";
    for (const auto& rc : reported_capacities()) out << rc.name << sep << rc.percent << '\n';
    out << '\n';
    out << "missing-letter similarity (Jaro-Winkler, ten short samples):\n";
    row("similarity", r.missing_letter_similarity);
    out << "average" << sep << r.missing_letter_similarity_avg << '\n';
    return out.str();
}

}  // namespace bench
}  // namespace stegotext

#endif
