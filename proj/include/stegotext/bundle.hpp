#ifndef STEGOTEXT_BUNDLE_HPP
#define STEGOTEXT_BUNDLE_HPP

#include <cstddef>
#include <string>

namespace stegotext {

struct EmbedStats {
    std::size_t hidden_bytes = 0;
    std::size_t cover_bytes = 0;
    std::size_t words_used = 0;
    std::size_t reuse_warnings = 0;
};

/// Stego text plus the method-specific key and embedding statistics.
/// cover_text is the reconstructed cover used for capacity/similarity:
/// the unmasked word list for missing-letter, the stego text itself for
/// wordlist, the input cover for paragraph.
template <typename Key>
struct StegoBundle {
    std::string stego_text;
    Key stego_key;
    std::string cover_text;
    EmbedStats stats;
};

}  // namespace stegotext

#endif
