// Acceptance suite: runs each criterion and prints one pass/fail line.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stegotext/bench.hpp"
#include "stegotext/stegotext.hpp"

using namespace stegotext;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string data_path(const std::string& name) {
    return std::string(STEGOTEXT_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Dictionary load_dictionary() {
    std::ifstream in(data_path("dictionary.txt"));
    return Dictionary::load(in);
}

std::string tile_cover(const std::string& corpus, int copies) {
    std::string out;
    for (int i = 0; i < copies; ++i) {
        out += corpus;
        if (!out.empty() && out.back() != '\n') out += '\n';
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Criterion 1: full-pipeline round trip, 1000 fuzzed messages, all methods.
void criterion_round_trip(const Dictionary& dict, const std::string& corpus) {
    auto start = std::chrono::steady_clock::now();
    std::string big_cover = tile_cover(corpus, 11);  // > 4096 usable tokens
    RandomSource fuzz(101);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::size_t len = fuzz.index(513);
        MessageBytes msg(len);
        for (auto& b : msg) b = fuzz.byte();
        auto [cipher, key] = encipher(msg, fuzz);

        auto ml = missing_letter::hide(cipher, dict, fuzz);
        std::istringstream ml_stego(ml.stego_text);
        if (decipher(missing_letter::seek(ml_stego, ml.stego_key), key) != msg) {
            ok = false;
            detail = "missing-letter mismatch at trial " + std::to_string(trial);
        }

        auto wl = wordlist::hide(cipher, dict, fuzz);
        std::istringstream wl_stego(wl.stego_text);
        if (ok && decipher(wordlist::seek(wl_stego, wl.stego_key), key) != msg) {
            ok = false;
            detail = "wordlist mismatch at trial " + std::to_string(trial);
        }

        auto pg = paragraph::hide(cipher, big_cover);
        if (ok && decipher(paragraph::seek(pg.stego_text, pg.stego_key), key) != msg) {
            ok = false;
            detail = "paragraph mismatch at trial " + std::to_string(trial);
        }
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(elapsed) + "s exceeds 60s";
    }
    std::ostringstream d;
    d << std::fixed << std::setprecision(1) << elapsed << "s";
    report(1, "encipher-hide-seek-decipher identity, 1000 fuzzed messages x 3 methods", ok,
           detail.empty() ? d.str() : detail);
}

// Criterion 2: average percentage capacity over the ten samples.
void criterion_capacity(const Dictionary& dict, const std::string& corpus) {
    auto start = std::chrono::steady_clock::now();
    auto result = bench::run(dict, corpus, 202);
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << "ml=" << result.missing_letter_avg
      << " wl=" << result.wordlist_avg << " pg=" << result.paragraph_avg << " "
      << std::setprecision(1) << elapsed << "s";
    bool ok = result.missing_letter_avg >= 6.0 && result.missing_letter_avg <= 12.0 &&
              result.wordlist_avg >= 6.0 && result.wordlist_avg <= 12.0 &&
              result.paragraph_avg >= 1.5 && result.paragraph_avg <= 3.0 && elapsed < 10.0;
    report(2, "average capacity in [6,12] (missing-letter, wordlist) and [1.5,3] (paragraph)",
           ok, d.str());
}

// Criterion 3: missing-letter similarity >= 0.90; wordlist/paragraph identity.
void criterion_similarity(const Dictionary& dict, const std::string& corpus) {
    auto result = bench::run(dict, corpus, 303);
    bool ok = result.missing_letter_similarity_avg >= 0.90;
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << "ml_avg=" << result.missing_letter_similarity_avg;

    RandomSource rng(304);
    for (int trial = 0; trial < 10 && ok; ++trial) {
        CipherText cipher(rng.index(64));
        for (auto& u : cipher) u = rng.byte();
        auto wl = wordlist::hide(cipher, dict, rng);
        if (wl.stego_text != wl.cover_text) {
            ok = false;
            d << " wordlist cover/stego differ";
        }
        std::string cover = tile_cover(corpus, 2);
        auto pg = paragraph::hide(cipher, cover);
        if (ok && pg.stego_text != cover) {
            ok = false;
            d << " paragraph cover/stego differ";
        }
    }
    report(3, "missing-letter Jaro-Winkler >= 0.90; wordlist/paragraph byte-identity", ok, d.str());
}

// Independent brute-force Jaro for criterion 4.
double jaro_oracle(const std::string& a, const std::string& b) {
    if (a == b) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    int window = static_cast<int>(std::max(a.size(), b.size())) / 2 - 1;
    if (window < 0) window = 0;
    std::vector<int> taken(b.size(), 0);
    std::string sub_a, sub_b;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = std::max(0, i - window);
             j < std::min<int>(static_cast<int>(b.size()), i + window + 1); ++j)
            if (!taken[j] && a[i] == b[j]) {
                taken[j] = 1;
                sub_a += a[i];
                break;
            }
    for (std::size_t j = 0; j < b.size(); ++j)
        if (taken[j]) sub_b += b[j];
    double m = static_cast<double>(sub_a.size());
    if (m == 0) return 0.0;
    int out_of_order = 0;
    for (std::size_t i = 0; i < sub_a.size(); ++i)
        if (sub_a[i] != sub_b[i]) ++out_of_order;
    double t = out_of_order / 2.0;
    return (m / a.size() + m / b.size() + (m - t) / m) / 3.0;
}

void criterion_jaro_oracle() {
    auto start = std::chrono::steady_clock::now();
    RandomSource rng(404);
    auto random_string = [&rng]() {
        std::string s(rng.index(7), 'a');
        for (char& c : s) c = static_cast<char>('a' + rng.range(0, 3));
        return s;
    };
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100000 && ok; ++trial) {
        std::string a = random_string();
        std::string b = random_string();
        if (std::abs(metrics::jaro(a, b) - jaro_oracle(a, b)) > 1e-12) {
            ok = false;
            detail = "mismatch on (\"" + a + "\",\"" + b + "\")";
        }
    }
    if (ok && std::abs(metrics::jaro("MARTHA", "MARHTA") - 0.9444) > 1e-4) {
        ok = false;
        detail = "MARTHA/MARHTA jaro off";
    }
    if (ok && std::abs(metrics::jaro_winkler("MARTHA", "MARHTA") - 0.9611) > 1e-4) {
        ok = false;
        detail = "MARTHA/MARHTA jaro-winkler off";
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 30.0) {
        ok = false;
        detail = "runtime exceeds 30s";
    }
    std::ostringstream d;
    d << std::fixed << std::setprecision(1) << elapsed << "s";
    report(4, "jaro agrees with brute-force oracle on 100k pairs plus MARTHA/MARHTA", ok,
           detail.empty() ? d.str() : detail);
}

// Criterion 5: paragraph zero-degradation and tamper detection.
void criterion_paragraph(const std::string& corpus) {
    std::string cover = tile_cover(corpus, 2);
    auto tokens = paragraph::tokenize(cover);
    RandomSource rng(505);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        CipherText cipher(1 + rng.index(80));
        for (auto& u : cipher) u = rng.byte();
        auto bundle = paragraph::hide(cipher, cover);
        if (bundle.stego_text != cover) {
            ok = false;
            detail = "stego differs from cover";
            break;
        }
        // Corrupt one key letter to something matching neither the start nor
        // the end letter of its token.
        std::string key = bundle.stego_key;
        std::size_t idx = rng.index(key.size());
        std::size_t tok = 0, usable_seen = 0;
        for (; tok < tokens.size(); ++tok) {
            if (tokens[tok].usable && usable_seen++ == idx) break;
        }
        char bad = 'a';
        while (bad == tokens[tok].start || bad == tokens[tok].end) ++bad;
        key[idx] = bad;
        try {
            paragraph::seek(bundle.stego_text, key);
            ok = false;
            detail = "corrupted key silently decoded";
        } catch (const KeyMismatch& e) {
            if (e.token_index != idx) {
                ok = false;
                detail = "mismatch reported at wrong index";
            }
        }
    }
    report(5, "paragraph stego is byte-identical; corrupted key raises KeyMismatch", ok, detail);
}

// Criterion 6: key discipline.
void criterion_key_discipline() {
    bool ok = true;
    std::string detail;
    RandomSource lens(606);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::size_t len = lens.index(300);
        MessageBytes msg(len, 0x5a);
        RandomSource rng(700 + trial);
        auto [cipher, key] = encipher(msg, rng);
        if (key.size() != len || cipher.size() != len) {
            ok = false;
            detail = "length law violated";
        }
    }
    std::set<OneTimeKey> keys;
    MessageBytes msg{1, 2, 3, 4, 5, 6, 7, 8};
    for (int trial = 0; trial < 100; ++trial) {
        RandomSource rng;  // OS-entropy seeded
        auto [cipher, key] = encipher(msg, rng);
        keys.insert(key);
    }
    if (keys.size() != 100) {
        ok = false;
        detail = "only " + std::to_string(keys.size()) + " distinct keys out of 100";
    }
    report(6, "key length equals message length; 100 independent keys all distinct", ok, detail);
}

// Criterion 7: missing-letter encoding-rule conformance over all 256 units.
void criterion_encoding_rules(const Dictionary& dict) {
    RandomSource rng(707);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 255 && ok; ++n) {
        for (int rep = 0; rep < 8 && ok; ++rep) {
            auto [line, flag] = missing_letter::encode_unit(static_cast<CipherUnit>(n), dict, rng);
            std::vector<int> qs;
            for (std::size_t i = 0; i < line.masked_word.size(); ++i)
                if (line.masked_word[i] == '?') qs.push_back(static_cast<int>(i) + 1);
            int len = static_cast<int>(line.masked_word.size());
            auto fail = [&](const std::string& why) {
                ok = false;
                detail = "unit " + std::to_string(n) + ": " + why;
            };
            if (n < 100) {
                int q = n / 10, r = n % 10;
                int want_len = q < 6 ? 10 + q : q;
                if (flag != 0) fail("flag != 0");
                else if (len != want_len) fail("wrong length");
                else if (r == 0 && (qs.size() != 1 || line.hint.empty())) fail("hint case shape");
                else if (r >= 1 && r <= q && (qs.size() != 1 || qs[0] != r || !line.hint.empty()))
                    fail("single-miss shape");
                else if (r > q) {
                    if (qs.size() != 2 || qs[0] != r - q || !line.hint.empty())
                        fail("double-miss shape");
                    else if (q >= 6 && !(qs[0] <= 3 && qs[1] > 3 && qs[1] <= len))
                        fail("double-miss range (q>=6)");
                    else if (q < 6 && !(qs[0] <= 9 && qs[1] > 9 && qs[1] <= len))
                        fail("double-miss range (q<6)");
                }
            } else {
                int q = n / 100, r = (n / 10) % 10;
                if (flag != 1 + n % 10) fail("flag != 1+lsd");
                else if (len != 10 + q) fail("wrong length");
                else if (!line.hint.empty()) fail("unexpected hint");
                else if (qs.size() != 1) fail("'?' count");
                else if (r == 0 && !(qs[0] >= 10 && qs[0] <= len)) fail("r=0 position range");
                else if (r != 0 && qs[0] != r) fail("position != r");
            }
        }
    }
    report(7, "missing-letter case table holds for all 256 units", ok, detail);
}

}  // namespace

int main() {
    Dictionary dict = load_dictionary();
    std::string corpus = read_file(data_path("cover.txt"));

    criterion_round_trip(dict, corpus);
    criterion_capacity(dict, corpus);
    criterion_similarity(dict, corpus);
    criterion_jaro_oracle();
    criterion_paragraph(corpus);
    criterion_key_discipline();
    criterion_encoding_rules(dict);

    std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed")
              << "\n";
    return g_failures;
}
