#ifndef STEGOTEXT_METRICS_HPP
#define STEGOTEXT_METRICS_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "stegotext/errors.hpp"

namespace stegotext {
namespace metrics {

struct SimilarityParams {
    double prefix_scale = 0.1;
    int max_prefix = 4;
};

struct CapacityReport {
    std::size_t hidden_bytes;
    std::size_t cover_bytes;
    double percent;
};

struct SimilarityReport {
    std::vector<std::pair<std::size_t, double>> per_pair;
    double average = 0.0;
};

inline double capacity_percent(std::size_t hidden_bytes, std::size_t cover_bytes) {
    if (cover_bytes == 0) throw ZeroCover();
    return 100.0 * static_cast<double>(hidden_bytes) / static_cast<double>(cover_bytes);
}

/// Jaro similarity. Characters match when equal and no farther apart than
/// floor(max(|s1|,|s2|)/2) - 1; t is half the count of matched characters in
/// different order.
inline double jaro(std::string_view s1, std::string_view s2) {
    if (s1 == s2) return 1.0;
    if (s1.empty() || s2.empty()) return 0.0;

    std::size_t len1 = s1.size(), len2 = s2.size();
    std::ptrdiff_t window = static_cast<std::ptrdiff_t>(std::max(len1, len2)) / 2 - 1;
    if (window < 0) window = 0;

    std::vector<bool> matched1(len1, false), matched2(len2, false);
    std::size_t m = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        std::size_t lo = static_cast<std::ptrdiff_t>(i) > window ? i - window : 0;
        std::size_t hi = std::min(len2, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!matched2[j] && s1[i] == s2[j]) {
                matched1[i] = matched2[j] = true;
                ++m;
                break;
            }
        }
    }
    if (m == 0) return 0.0;

    std::size_t transposed = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        if (!matched1[i]) continue;
        while (!matched2[j]) ++j;
        if (s1[i] != s2[j]) ++transposed;
        ++j;
    }
    double t = transposed / 2.0;
    double dm = static_cast<double>(m);
    return (dm / len1 + dm / len2 + (dm - t) / dm) / 3.0;
}

inline double jaro_winkler(std::string_view s1, std::string_view s2,
                           const SimilarityParams& params = {}) {
    double j = jaro(s1, s2);
    int prefix = 0;
    std::size_t limit = std::min({s1.size(), s2.size(),
                                  static_cast<std::size_t>(params.max_prefix)});
    while (static_cast<std::size_t>(prefix) < limit &&
           s1[prefix] == s2[prefix])
        ++prefix;
    return j + prefix * params.prefix_scale * (1.0 - j);
}

namespace detail {

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace detail

/// Line-by-line Jaro-Winkler between cover and stego; hint suffixes on stego
/// lines count as ordinary characters.
inline SimilarityReport stego_similarity_report(std::istream& cover, std::istream& stego,
                                                const SimilarityParams& params = {}) {
    auto cover_lines = detail::read_lines(cover);
    auto stego_lines = detail::read_lines(stego);
    if (cover_lines.size() != stego_lines.size())
        throw LineCountMismatch(cover_lines.size(), stego_lines.size());
    SimilarityReport report;
    double sum = 0.0;
    for (std::size_t i = 0; i < cover_lines.size(); ++i) {
        double score = jaro_winkler(cover_lines[i], stego_lines[i], params);
        report.per_pair.emplace_back(i + 1, score);
        sum += score;
    }
    if (!report.per_pair.empty()) report.average = sum / report.per_pair.size();
    return report;
}

}  // namespace metrics
}  // namespace stegotext

#endif
