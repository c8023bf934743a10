#ifndef STEGOTEXT_TESTS_HELPERS_HPP
#define STEGOTEXT_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "stegotext/dictionary.hpp"

namespace test_helpers {

inline std::string data_path(const std::string& name) {
    return std::string(STEGOTEXT_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const stegotext::Dictionary& sample_dictionary() {
    static const stegotext::Dictionary dict = [] {
        std::ifstream in(data_path("dictionary.txt"));
        return stegotext::Dictionary::load(in);
    }();
    return dict;
}

inline const std::string& sample_cover() {
    static const std::string cover = read_file(data_path("cover.txt"));
    return cover;
}

}  // namespace test_helpers

#endif
