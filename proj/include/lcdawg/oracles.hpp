#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lcdawg/text.hpp"

// Brute-force reference implementations. They share no code or data
// structures with the index and are only used to cross-check it.
namespace lcdawg::oracle {

inline constexpr std::size_t kDefaultMaxN = 300;

// All 1-based start positions of `pattern` in `text`, by direct scan.
std::vector<std::uint64_t> naive_find(std::span<const Symbol> text, std::span<const Symbol> pattern);

struct MaximalRepeat {
    std::string value;
    std::uint64_t occurrences = 0;
    std::string right;  // distinct symbols a with value·a a substring, ascending
    std::string left;   // distinct symbols a with a·value a substring, ascending
};

struct MaximalRepeats {
    // The empty string comes first and is always listed.
    std::vector<MaximalRepeat> repeats;
    std::uint64_t right_extensions = 0;
    std::uint64_t left_extensions = 0;

    std::size_t nonempty() const { return repeats.size() - 1; }
};

// Maximal repeats of the text body, or of body·$ when `with_sentinel`.
// Refuses (OracleLimitError) when the text is longer than `max_n`.
MaximalRepeats brute_maximal_repeats(const Text& text, bool with_sentinel,
                                     std::size_t max_n = kDefaultMaxN);

struct AutomatonSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    // Longest string of every node.
    std::set<std::string> values;
};

// Minimal compact automaton of the suffixes of body·$, from end-position
// equivalence classes of all substrings. Refuses texts longer than `max_n`.
AutomatonSummary brute_minimal_automaton(const Text& text, std::size_t max_n = kDefaultMaxN);

// A copy of `length` symbols from the 0-based `source` (which may overlap the
// factor itself), or a single fresh symbol when `length` is 0.
struct LzFactor {
    std::uint64_t source = 0;
    std::uint64_t length = 0;
    Symbol literal = 0;
};

// Greedy left-to-right LZ77 parse with self-referencing sources.
std::vector<LzFactor> lz77_parse(std::span<const Symbol> text);

// Number of runs in the BWT of a sentinel-terminated sequence, via a naively
// sorted suffix array.
std::uint64_t bwt_runs(std::span<const Symbol> terminated);

}  // namespace lcdawg::oracle
