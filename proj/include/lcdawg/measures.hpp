#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcdawg/cdawg.hpp"
#include "lcdawg/index.hpp"
#include "lcdawg/text.hpp"

namespace lcdawg {

// Repetitiveness measures of a text and size figures of its index.
//
// Conventions: mu counts the nonempty maximal repeats. e_r and e_l count the
// right and left extensions (within the text, sentinel excluded) of the
// maximal repeats including the empty string.
struct IndexStats {
    std::uint64_t n = 0;
    std::uint64_t sigma = 0;
    std::uint64_t mu = 0;
    std::uint64_t e_r = 0;
    std::uint64_t e_l = 0;
    std::uint64_t e_tilde = 0;
    std::uint64_t type1_count = 0;
    std::uint64_t type2_count = 0;
    std::uint64_t edge_count = 0;
    std::uint64_t production_count = 0;
    std::uint64_t grammar_height = 0;
    std::optional<std::uint64_t> z;
    std::optional<std::uint64_t> r;
};

struct MeasureOptions {
    bool lz = false;
    bool bwt_runs = false;
};

// Edges of the CDAWG whose label does not start with the sentinel.
std::uint64_t right_extensions(const Cdawg& cdawg);

IndexStats measure_text(const Text& text, const MeasureOptions& options = {});

// Measures of `text` reusing an already built pipeline over it.
IndexStats measure_build(const BuildResult& built, const Text& text, const MeasureOptions& options = {});

// Same figures from an index alone; e_l and the optional measures are taken
// from the text reconstructed through the grammar.
IndexStats measure_index(const Index& index, const MeasureOptions& options = {});

// `n=8 sigma=4 mu=...` on one line.
std::string format_stats_line(const IndexStats& stats);

// One `key=value` per line.
std::string format_stats_document(const IndexStats& stats);

}  // namespace lcdawg
