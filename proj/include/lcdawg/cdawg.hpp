#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcdawg/text.hpp"

namespace lcdawg {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Half-open window [pos, pos + len) into the sentinel-terminated text, 0-based.
struct LabelSpan {
    std::uint64_t pos = 0;
    std::uint64_t len = 0;

    friend bool operator==(const LabelSpan&, const LabelSpan&) = default;
};

struct CdawgEdge {
    NodeId hi = kNoNode;
    NodeId lo = kNoNode;
    Symbol first = 0;
    LabelSpan label;
};

// Compact directed acyclic word graph of a sentinel-terminated text.
//
// Node 0 is the source, node 1 the sink. Edges are stored grouped by their
// upper endpoint and sorted by first symbol, so the children of a node form a
// contiguous range. Labels point into the text, which must outlive any use of
// label().
class Cdawg {
public:
    static constexpr NodeId kSource = 0;
    static constexpr NodeId kSink = 1;

    NodeId source() const noexcept { return kSource; }
    NodeId sink() const noexcept { return kSink; }

    std::size_t node_count() const noexcept { return depth_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const CdawgEdge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const CdawgEdge> edges() const noexcept { return edges_; }

    EdgeId first_edge(NodeId v) const { return edge_begin_[v]; }
    EdgeId end_edge(NodeId v) const { return edge_begin_[v + 1]; }
    std::size_t out_degree(NodeId v) const { return end_edge(v) - first_edge(v); }

    // Out-edge of `v` whose label starts with `c`; binary search over siblings.
    std::optional<EdgeId> find_child(NodeId v, Symbol c) const;

    // kNoNode for the source.
    NodeId slink(NodeId v) const { return slink_[v]; }

    // Length of the longest string represented by `v`.
    std::uint64_t depth(NodeId v) const { return depth_[v]; }

    // Start of one occurrence of the longest string of `v` in the text.
    std::uint64_t occurrence(NodeId v) const { return occurrence_[v]; }

    // Longest string of `v`, read from `text`.
    std::string value(NodeId v, const Text& text) const;

    // Node ids sorted by increasing depth (a topological order).
    std::vector<NodeId> topological_order() const;

private:
    friend Cdawg build_cdawg(const Text& text);

    std::vector<EdgeId> edge_begin_;
    std::vector<CdawgEdge> edges_;
    std::vector<NodeId> slink_;
    std::vector<std::uint64_t> depth_;
    std::vector<std::uint64_t> occurrence_;
};

Cdawg build_cdawg(const Text& text);

// Number of distinct paths from every node to the sink.
std::vector<std::uint64_t> path_count(const Cdawg& cdawg);

std::string label_string(const Text& text, LabelSpan span);

}  // namespace lcdawg
