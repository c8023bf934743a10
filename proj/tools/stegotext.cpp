// stegotext: one-time-pad text steganography toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 I/O or parse failure, 3 length mismatch,
// 4 empty dictionary bucket, 5 cover too short, 6 malformed stego or key
// mismatch, 7 metric error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stegotext/bench.hpp"
#include "stegotext/stegotext.hpp"

namespace st = stegotext;

namespace {

constexpr int kExitIo = 2;
constexpr int kExitLengthMismatch = 3;
constexpr int kExitEmptyBucket = 4;
constexpr int kExitCoverTooShort = 5;
constexpr int kExitMalformed = 6;
constexpr int kExitMetric = 7;

struct IoFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure{"cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure{"cannot open " + path + " for writing"};
    out << content;
    if (!out) throw IoFailure{"write failed: " + path};
}

st::Dictionary load_dict(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure{"cannot open dictionary " + path};
    return st::Dictionary::load(in);
}

st::StegoMethod parse_method(const std::string& name) {
    if (name == "missing-letter") return st::StegoMethod::missing_letter;
    if (name == "wordlist") return st::StegoMethod::wordlist;
    if (name == "paragraph") return st::StegoMethod::paragraph;
    throw CLI::ValidationError("--method", "unknown method: " + name);
}

void print_stats(const st::EmbedStats& stats) {
    std::cerr << "hidden_bytes=" << stats.hidden_bytes << " cover_bytes=" << stats.cover_bytes
              << " capacity=" << std::fixed << std::setprecision(2)
              << st::metrics::capacity_percent(stats.hidden_bytes,
                                               std::max<std::size_t>(stats.cover_bytes, 1))
              << "% words=" << stats.words_used << " reuse_warnings=" << stats.reuse_warnings
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"text steganography toolkit: one-time-pad scrambling with "
                 "missing-letter, wordlist and paragraph hiding"};
    app.require_subcommand(1);

    std::string in_path, out_path, key_path, dict_path, cover_path;
    std::string stego_path, stego_key_path, method_name, format = "tsv";
    std::optional<std::uint64_t> seed;
    std::string cover_out_path;
    std::size_t hidden = 0, cover_bytes = 0;

    auto* enc = app.add_subcommand("encipher", "scramble a message with a one-time pad");
    enc->add_option("--in", in_path, "message file")->required();
    enc->add_option("--out", out_path, "cipher output (one value per line)")->required();
    enc->add_option("--key", key_path, "key output (one value per line)")->required();
    enc->add_option("--seed", seed, "deterministic randomness (testing only)");

    auto* dec = app.add_subcommand("decipher", "recover a message from cipher and key");
    dec->add_option("--in", in_path, "cipher file")->required();
    dec->add_option("--key", key_path, "key file")->required();
    dec->add_option("--out", out_path, "recovered message output")->required();

    auto* hide = app.add_subcommand("hide", "embed a cipher into a stego file");
    hide->add_option("--method", method_name, "missing-letter|wordlist|paragraph")->required();
    hide->add_option("--in", in_path, "cipher file")->required();
    hide->add_option("--stego", stego_path, "stego text output")->required();
    hide->add_option("--stego-key", stego_key_path, "stego key output")->required();
    hide->add_option("--dict", dict_path, "dictionary (missing-letter/wordlist)");
    hide->add_option("--cover", cover_path, "cover text (paragraph)");
    hide->add_option("--cover-out", cover_out_path, "write the reconstructed cover");
    hide->add_option("--seed", seed, "deterministic randomness (testing only)");

    auto* seek = app.add_subcommand("seek", "extract a cipher from a stego file");
    seek->add_option("--method", method_name, "missing-letter|wordlist|paragraph")->required();
    seek->add_option("--stego", stego_path, "stego text input")->required();
    seek->add_option("--stego-key", stego_key_path, "stego key input")->required();
    seek->add_option("--out", out_path, "cipher output")->required();

    auto* measure = app.add_subcommand("measure", "capacity and similarity metrics");
    measure->require_subcommand(1);
    auto* cap = measure->add_subcommand("capacity", "percentage capacity");
    cap->add_option("--hidden", hidden, "hidden bytes")->required();
    cap->add_option("--cover", cover_bytes, "cover size in bytes")->required();
    auto* jaro = measure->add_subcommand("jaro", "line-by-line Jaro-Winkler report");
    jaro->add_option("--cover", cover_path, "cover file")->required();
    jaro->add_option("--stego", stego_path, "stego file")->required();
    jaro->add_option("--format", format, "tsv|md")->check(CLI::IsMember({"tsv", "md"}));

    auto* bench = app.add_subcommand("bench", "capacity/similarity benchmark over ten samples");
    bench->add_option("--dict", dict_path, "dictionary file")->required();
    bench->add_option("--cover", cover_path, "cover corpus for the paragraph method")->required();
    bench->add_option("--out", out_path, "report output (default stdout)");
    bench->add_option("--seed", seed, "deterministic randomness");
    bench->add_option("--format", format, "tsv|md")->check(CLI::IsMember({"tsv", "md"}));

    auto* dict_check = app.add_subcommand("dict-check", "audit dictionary coverage");
    dict_check->add_option("--dict", dict_path, "dictionary file")->required();
    dict_check->add_option("--method", method_name, "missing-letter|wordlist")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) {
            std::string message = read_file(in_path);
            st::RandomSource rng = st::make_random(seed);
            auto [cipher, key] = st::encipher(st::MessageBytes(message.begin(), message.end()), rng);
            std::ostringstream cs, ks;
            st::formats::write_byte_lines(cs, cipher);
            st::formats::write_byte_lines(ks, key);
            write_file(out_path, cs.str());
            write_file(key_path, ks.str());
        } else if (*dec) {
            std::istringstream cs(read_file(in_path)), ks(read_file(key_path));
            auto cipher = st::formats::read_byte_lines(cs);
            auto key = st::formats::read_byte_lines(ks);
            auto message = st::decipher(cipher, key);
            write_file(out_path, std::string(message.begin(), message.end()));
        } else if (*hide) {
            st::StegoMethod method = parse_method(method_name);
            std::istringstream cs(read_file(in_path));
            auto cipher = st::formats::read_byte_lines(cs);
            if (method == st::StegoMethod::paragraph) {
                if (cover_path.empty()) throw CLI::ValidationError("--cover", "paragraph method needs a cover file");
                auto bundle = st::paragraph::hide(cipher, read_file(cover_path));
                write_file(stego_path, bundle.stego_text);
                std::ostringstream ks;
                st::formats::write_letter_key(ks, bundle.stego_key);
                write_file(stego_key_path, ks.str());
                if (!cover_out_path.empty()) write_file(cover_out_path, bundle.cover_text);
                print_stats(bundle.stats);
            } else {
                if (dict_path.empty()) throw CLI::ValidationError("--dict", "this method needs a dictionary");
                st::Dictionary dict = load_dict(dict_path);
                st::RandomSource rng = st::make_random(seed);
                std::string stego, cover;
                std::ostringstream ks;
                st::EmbedStats stats;
                if (method == st::StegoMethod::missing_letter) {
                    auto bundle = st::missing_letter::hide(cipher, dict, rng);
                    stego = bundle.stego_text;
                    cover = bundle.cover_text;
                    stats = bundle.stats;
                    st::formats::write_int_lines(ks, bundle.stego_key);
                } else {
                    auto bundle = st::wordlist::hide(cipher, dict, rng);
                    stego = bundle.stego_text;
                    cover = bundle.cover_text;
                    stats = bundle.stats;
                    st::formats::write_int_lines(ks, bundle.stego_key);
                }
                write_file(stego_path, stego);
                write_file(stego_key_path, ks.str());
                if (!cover_out_path.empty()) write_file(cover_out_path, cover);
                print_stats(stats);
            }
        } else if (*seek) {
            st::StegoMethod method = parse_method(method_name);
            st::CipherText cipher;
            if (method == st::StegoMethod::paragraph) {
                std::istringstream ks(read_file(stego_key_path));
                cipher = st::paragraph::seek(read_file(stego_path), st::formats::read_letter_key(ks));
            } else if (method == st::StegoMethod::missing_letter) {
                std::istringstream ks(read_file(stego_key_path));
                auto key = st::formats::read_int_lines(ks, 0, 10);
                std::istringstream ss(read_file(stego_path));
                cipher = st::missing_letter::seek(ss, key);
            } else {
                std::istringstream ks(read_file(stego_key_path));
                auto key = st::formats::read_int_lines(ks, 0, 2);
                std::istringstream ss(read_file(stego_path));
                cipher = st::wordlist::seek(ss, key);
            }
            std::ostringstream cs;
            st::formats::write_byte_lines(cs, cipher);
            write_file(out_path, cs.str());
        } else if (*cap) {
            std::cout << std::fixed << std::setprecision(2)
                      << st::metrics::capacity_percent(hidden, cover_bytes) << "\n";
        } else if (*jaro) {
            std::istringstream cs(read_file(cover_path)), ss(read_file(stego_path));
            auto report = st::metrics::stego_similarity_report(cs, ss);
            std::cout << std::fixed << std::setprecision(2);
            const char* sep = format == "md" ? " | " : "\t";
            for (const auto& [index, score] : report.per_pair)
                std::cout << index << sep << score << "\n";
            std::cout << "average" << sep << report.average << "\n";
        } else if (*bench) {
            st::Dictionary dict = load_dict(dict_path);
            std::string corpus = read_file(cover_path);
            auto result = st::bench::run(dict, corpus, seed);
            std::string report = st::bench::format(result, format == "md");
            if (out_path.empty())
                std::cout << report;
            else
                write_file(out_path, report);
        } else if (*dict_check) {
            st::Dictionary dict = load_dict(dict_path);
            st::StegoMethod method = parse_method(method_name);
            auto report = st::audit_coverage(dict, method);
            if (report.ok()) {
                std::cout << "coverage ok: " << dict.size() << " entries\n";
            } else {
                for (const auto& b : report.missing) {
                    std::cout << "missing: length " << b.length;
                    if (b.initial) std::cout << " initial '" << b.initial << "'";
                    if (b.needs_gloss) std::cout << " (glossed)";
                    std::cout << "\n";
                }
                return kExitEmptyBucket;
            }
        }
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitIo;
    } catch (const st::LengthMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLengthMismatch;
    } catch (const st::EmptyBucket& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyBucket;
    } catch (const st::CoverTooShort& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCoverTooShort;
    } catch (const st::KeyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const st::MalformedStego& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const st::BadBitCount& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const st::ZeroCover& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMetric;
    } catch (const st::LineCountMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMetric;
    } catch (const st::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
