#pragma once

#include <random>
#include <string>
#include <vector>

#include "lcdawg/index.hpp"
#include "lcdawg/verify.hpp"

namespace testing {

inline std::string label(const lcdawg::BuildResult& built, const lcdawg::Text& text, lcdawg::EdgeId e) {
    return lcdawg::label_string(text, built.spans[e]);
}

inline std::string spelled(const lcdawg::BuildResult& built, const lcdawg::Text& text,
                           const std::vector<lcdawg::EdgeId>& path) {
    std::string s;
    for (lcdawg::EdgeId e : path) s += label(built, text, e);
    return s;
}

// Random texts of length [1, max_n] cycling through the usual alphabet sizes.
inline std::vector<std::string> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    static constexpr unsigned kSigmas[] = {2, 4, 26, 255};
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 1 + rng() % max_n;
        out.push_back(lcdawg::verify::random_text(rng, n, kSigmas[i % 4]));
    }
    return out;
}

}  // namespace testing
