#ifndef STEGOTEXT_FORMATS_HPP
#define STEGOTEXT_FORMATS_HPP

#include <cctype>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "stegotext/errors.hpp"
#include "stegotext/otp.hpp"

namespace stegotext {
namespace formats {

/// Cipher and OTP key files: one decimal integer (0-255) per line.
inline void write_byte_lines(std::ostream& out, const std::vector<std::uint8_t>& values) {
    for (std::uint8_t v : values) out << static_cast<int>(v) << '\n';
}

inline std::vector<std::uint8_t> read_byte_lines(std::istream& in) {
    std::vector<std::uint8_t> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int v;
        try {
            v = std::stoi(line);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected a decimal integer, got \"" + line + "\"");
        }
        if (v < 0 || v > 255) throw ParseError(lineno, "value " + std::to_string(v) + " outside [0,255]");
        values.push_back(static_cast<std::uint8_t>(v));
    }
    return values;
}

/// Missing-letter and wordlist stego keys: one small decimal per line.
inline void write_int_lines(std::ostream& out, const std::vector<int>& values) {
    for (int v : values) out << v << '\n';
}

inline std::vector<int> read_int_lines(std::istream& in, int lo, int hi) {
    std::vector<int> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int v;
        try {
            v = std::stoi(line);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected a decimal integer, got \"" + line + "\"");
        }
        if (v < lo || v > hi)
            throw ParseError(lineno, "value " + std::to_string(v) + " outside [" +
                                         std::to_string(lo) + "," + std::to_string(hi) + "]");
        values.push_back(v);
    }
    return values;
}

/// Paragraph stego key: lowercase letters wrapped at 72 columns; readers
/// ignore newlines.
inline void write_letter_key(std::ostream& out, const std::string& letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        out << letters[i];
        if ((i + 1) % 72 == 0) out << '\n';
    }
    if (letters.size() % 72 != 0) out << '\n';
}

inline std::string read_letter_key(std::istream& in) {
    std::string letters;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char c : line) {
            if (c == '\r') continue;
            if (!std::islower(static_cast<unsigned char>(c)))
                throw ParseError(lineno, std::string("stego key contains non-lowercase-letter '") + c + "'");
            letters += c;
        }
    }
    return letters;
}

}  // namespace formats
}  // namespace stegotext

#endif
