#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "stegotext/formats.hpp"
#include "stegotext/random.hpp"

using namespace stegotext;

TEST_CASE("byte lines golden format") {
    std::ostringstream out;
    formats::write_byte_lines(out, {0, 64, 255});
    CHECK(out.str() == "0\n64\n255\n");
    std::istringstream in(out.str());
    CHECK(formats::read_byte_lines(in) == std::vector<std::uint8_t>{0, 64, 255});
}

TEST_CASE("byte lines write-read-write is byte identical") {
    RandomSource rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> values(rng.index(64));
        for (auto& v : values) v = rng.byte();
        std::ostringstream first;
        formats::write_byte_lines(first, values);
        std::istringstream in(first.str());
        std::ostringstream second;
        formats::write_byte_lines(second, formats::read_byte_lines(in));
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("byte lines reject junk and out-of-range values") {
    std::istringstream bad1("12\nhello\n");
    CHECK_THROWS_AS(formats::read_byte_lines(bad1), ParseError);
    std::istringstream bad2("300\n");
    CHECK_THROWS_AS(formats::read_byte_lines(bad2), ParseError);
}

TEST_CASE("flag lines respect their range") {
    std::ostringstream out;
    formats::write_int_lines(out, {0, 10, 2});
    CHECK(out.str() == "0\n10\n2\n");
    std::istringstream in(out.str());
    CHECK(formats::read_int_lines(in, 0, 10) == std::vector<int>{0, 10, 2});
    std::istringstream bad(out.str());
    CHECK_THROWS_AS(formats::read_int_lines(bad, 0, 2), ParseError);
}

TEST_CASE("letter key wraps at 72 columns and reads back flat") {
    std::string letters(100, 'a');
    for (std::size_t i = 0; i < letters.size(); ++i)
        letters[i] = static_cast<char>('a' + i % 26);
    std::ostringstream out;
    formats::write_letter_key(out, letters);
    std::string text = out.str();
    CHECK(text.find('\n') == 72);
    CHECK(text.back() == '\n');
    std::istringstream in(text);
    CHECK(formats::read_letter_key(in) == letters);
}

TEST_CASE("letter key rejects non-letter content") {
    std::istringstream bad("abc1\n");
    CHECK_THROWS_AS(formats::read_letter_key(bad), ParseError);
}
