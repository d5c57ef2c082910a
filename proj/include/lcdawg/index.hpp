#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcdawg/cdawg.hpp"
#include "lcdawg/lcdawg.hpp"
#include "lcdawg/slp.hpp"
#include "lcdawg/text.hpp"

namespace lcdawg {

// Where a pattern walk from the source ends: `offset` symbols of `edge`'s
// label remain below the match (0 means the walk stopped at edge.lo).
struct Locus {
    EdgeId edge = kNoEdge;
    std::uint64_t offset = 0;
    std::uint64_t matched = 0;
};

// Ascending 1-based start positions.
using OccurrenceList = std::vector<std::uint64_t>;

struct BuildOptions {
    // Compare Karp-Rabin fingerprints of every edge variable and of the root
    // against the text before discarding it. Linear in n plus grammar size.
    bool check_fingerprints = true;
};

// Self-index over a text: the linear-size CDAWG, its grammar and the per-node
// path counts. Holds no copy of the text. Immutable once built; all queries
// are const and may run concurrently.
class Index {
public:
    Index() = default;

    // Assembles an index from its tables and validates every invariant;
    // throws ConsistencyError on violation.
    Index(std::uint64_t n, std::uint32_t sigma, LCdawg graph, Slp slp,
          std::vector<std::uint64_t> counts);

    static Index build(const Text& text, const BuildOptions& options = {});

    std::uint64_t size() const noexcept { return n_; }
    std::uint32_t sigma() const noexcept { return sigma_; }
    const LCdawg& graph() const noexcept { return graph_; }
    const Slp& slp() const noexcept { return slp_; }
    std::span<const std::uint64_t> path_counts() const noexcept { return counts_; }

    std::optional<Locus> locate(std::span<const Symbol> pattern) const;
    OccurrenceList find(std::span<const Symbol> pattern) const;
    std::uint64_t count(std::span<const Symbol> pattern) const;
    bool exists(std::span<const Symbol> pattern) const;

    OccurrenceList find(std::string_view pattern) const { return find(as_symbols(pattern)); }
    std::uint64_t count(std::string_view pattern) const { return count(as_symbols(pattern)); }
    bool exists(std::string_view pattern) const { return exists(as_symbols(pattern)); }

    // T[i .. min(i + m - 1, n)], 1-based; BoundsError unless 1 <= i <= n.
    std::string extract(std::uint64_t i, std::uint64_t m) const;

    friend bool operator==(const Index&, const Index&) = default;

private:
    void validate() const;

    std::uint64_t n_ = 0;
    std::uint32_t sigma_ = 0;
    LCdawg graph_;
    Slp slp_;
    std::vector<std::uint64_t> counts_;
};

// Everything the construction produces, including the construction-only
// tables that refer back to the text. Used by tests and verification.
struct BuildResult {
    Cdawg cdawg;
    std::vector<LabelSpan> spans;    // per index edge, into the terminated text
    std::vector<EdgeId> origin;      // per index edge, the CDAWG edge it came from
    JumpTable jumps;
    std::vector<EdgeId> text_path;
    Index index;
};

BuildResult build_pipeline(const Text& text, const BuildOptions& options = {});

}  // namespace lcdawg
