#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "stegotext/paragraph.hpp"
#include "stegotext/random.hpp"

using namespace stegotext;
namespace pg = stegotext::paragraph;

TEST_CASE("to_bits expands MSB first") {
    CHECK(pg::to_bits({65}) == pg::BitStream{0, 1, 0, 0, 0, 0, 0, 1});
    CHECK(pg::to_bits({0}) == pg::BitStream(8, 0));
    CHECK(pg::to_bits({255}) == pg::BitStream(8, 1));
}

TEST_CASE("from_bits inverts to_bits") {
    CHECK(pg::from_bits(pg::BitStream{0, 1, 0, 0, 0, 0, 0, 1}) == CipherText{65});
    CHECK(pg::from_bits(pg::BitStream(8, 0)) == CipherText{0});
    CHECK(pg::from_bits(pg::BitStream(8, 1)) == CipherText{255});
    CHECK_THROWS_AS(pg::from_bits(pg::BitStream(7, 0)), BadBitCount);
}

TEST_CASE("tokenize extracts start and end letters") {
    auto tokens = pg::tokenize("The empty. area Rahel's a 123 ...");
    REQUIRE(tokens.size() == 7);
    CHECK(tokens[0].start == 't');
    CHECK(tokens[0].end == 'e');
    CHECK(tokens[0].usable);
    CHECK(tokens[1].start == 'e');
    CHECK(tokens[1].end == 'y');
    CHECK(tokens[1].usable);
    CHECK_FALSE(tokens[2].usable);  // same start/end letter
    CHECK(tokens[3].start == 'r');
    CHECK(tokens[3].end == 's');
    CHECK(tokens[3].usable);
    CHECK_FALSE(tokens[4].usable);  // single letter
    CHECK_FALSE(tokens[5].usable);  // no letters
    CHECK_FALSE(tokens[6].usable);
}

TEST_CASE("hide walks usable tokens and records start/end letters") {
    // bits [0,1] from the first two usable tokens of "The house ..."
    std::string cover = "The house itself looked empty. The doors and windows were locked.";
    auto bundle = pg::hide(CipherText{0x40}, cover);  // 0100 0000
    CHECK(bundle.stego_text == cover);
    CHECK(bundle.stego_key.substr(0, 2) == "te");
}

TEST_CASE("stego text is byte-identical to the cover") {
    const std::string& cover = test_helpers::sample_cover();
    RandomSource rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        CipherText cipher(rng.index(40));
        for (auto& u : cipher) u = rng.byte();
        auto bundle = pg::hide(cipher, cover);
        CHECK(bundle.stego_text == cover);
        CHECK(bundle.stego_key.size() == cipher.size() * 8);
        CHECK(pg::seek(bundle.stego_text, bundle.stego_key) == cipher);
    }
}

TEST_CASE("hide reports insufficient cover") {
    std::string cover = "The house itself looked empty.";  // 5 usable tokens
    try {
        pg::hide(CipherText{1, 2, 3}, cover);
        FAIL("expected CoverTooShort");
    } catch (const CoverTooShort& e) {
        CHECK(e.needed_usable == 24);
        CHECK(e.found_usable == 5);
    }
}

TEST_CASE("seek detects a corrupted key letter") {
    std::string cover = "The house itself looked empty.";
    try {
        pg::seek(cover, "x");
        FAIL("expected KeyMismatch");
    } catch (const KeyMismatch& e) {
        CHECK(e.token_index == 0);
    }
}

TEST_CASE("empty key yields empty cipher") {
    CHECK(pg::seek("any cover at all", "").empty());
}

TEST_CASE("key matching is case-insensitive against token letters") {
    auto bundle = pg::hide(CipherText{0x00}, "THE HOUSE ITSELF LOOKED EMPTY. CLOUDS DRIFT BY OK");
    CHECK(pg::seek(bundle.stego_text, bundle.stego_key) == CipherText{0x00});
}

TEST_CASE("token classification is deterministic") {
    const std::string& cover = test_helpers::sample_cover();
    auto a = pg::tokenize(cover);
    auto b = pg::tokenize(cover);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].raw == b[i].raw);
        CHECK(a[i].usable == b[i].usable);
    }
}
