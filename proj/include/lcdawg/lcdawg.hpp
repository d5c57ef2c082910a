#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcdawg/cdawg.hpp"
#include "lcdawg/text.hpp"

namespace lcdawg {

using VarId = std::uint32_t;
inline constexpr VarId kNoVar = std::numeric_limits<VarId>::max();

enum class NodeKind : std::uint8_t {
    type1 = 1,  // inherited from the CDAWG
    type2 = 2,  // inserted non-branching node
};

// Edge of the linear-size CDAWG. Only the first symbol and the label length
// are kept; the label itself is derived by the grammar variable `var`.
struct Edge {
    NodeId hi = kNoNode;
    NodeId lo = kNoNode;
    Symbol first = 0;
    std::uint64_t slen = 0;
    VarId var = kNoVar;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Shortcut from a type-2 node over its non-branching out-chain to the first
// type-1 node below it.
struct Skip {
    NodeId target = kNoNode;
    std::uint64_t len = 0;

    friend bool operator==(const Skip&, const Skip&) = default;
};

// Downward path of consecutive edges.
struct EdgePath {
    std::vector<EdgeId> edges;
    std::uint64_t slen = 0;
};

// DAG of type-1 and type-2 nodes. Node ids [0, type1_count()) are the CDAWG
// node ids (source 0, sink 1); type-2 nodes follow. Out-edges of a node are
// contiguous and sorted by first symbol.
class LCdawg {
public:
    static constexpr NodeId kSource = Cdawg::kSource;
    static constexpr NodeId kSink = Cdawg::kSink;

    LCdawg() = default;

    // Assembles a graph from raw tables. Edges are reordered by (hi, first);
    // returns the permutation applied (new id -> old id) through `order`.
    // Structural validation is left to validate().
    LCdawg(std::vector<NodeKind> kinds, std::vector<NodeId> slinks, std::vector<Skip> skips,
           std::vector<Edge> edges, std::vector<EdgeId>* order = nullptr);

    NodeId source() const noexcept { return kSource; }
    NodeId sink() const noexcept { return kSink; }

    std::size_t node_count() const noexcept { return kind_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t type1_count() const noexcept { return type1_count_; }
    std::size_t type2_count() const noexcept { return node_count() - type1_count_; }

    NodeKind kind(NodeId v) const { return kind_[v]; }
    bool is_type1(NodeId v) const { return kind_[v] == NodeKind::type1; }
    NodeId slink(NodeId v) const { return slink_[v]; }
    const Skip& skip(NodeId v) const { return skip_[v]; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    EdgeId first_edge(NodeId v) const { return edge_begin_[v]; }
    EdgeId end_edge(NodeId v) const { return edge_begin_[v + 1]; }
    std::size_t out_degree(NodeId v) const { return end_edge(v) - first_edge(v); }

    std::optional<EdgeId> find_child(NodeId v, Symbol c) const;

    void set_var(EdgeId e, VarId x) { edges_[e].var = x; }

    // Checks every structural invariant the query code relies on; throws
    // ConsistencyError describing the first violation.
    void validate() const;

    friend bool operator==(const LCdawg&, const LCdawg&) = default;

private:
    std::vector<NodeKind> kind_;
    std::vector<NodeId> slink_;
    std::vector<Skip> skip_;
    std::vector<EdgeId> edge_begin_;
    std::vector<Edge> edges_;
    std::size_t type1_count_ = 0;
};

// The transformed graph together with the construction-only label spans
// (indexed like the edges) used to check labels against the text.
struct LCdawgBuild {
    LCdawg graph;
    std::vector<LabelSpan> spans;
    // For every edge, the CDAWG edge it was cut from.
    std::vector<EdgeId> origin;
};

LCdawgBuild insert_type2_nodes(const Cdawg& cdawg, const Text& text);

// Path from slink(e.hi) spelling lab(e). Requires slen(e) >= 2.
EdgePath edge_suffix_link(const LCdawg& graph, EdgeId e);

// First edge of jump(e) for every edge; kNoEdge for atomic edges.
using JumpTable = std::vector<EdgeId>;

JumpTable compute_jump_links(const LCdawg& graph);

// Follows the non-branching chain from `first` down to the first type-1 node.
EdgePath chain_from(const LCdawg& graph, EdgeId first);

EdgePath jump(const LCdawg& graph, const JumpTable& table, EdgeId e);

// Edges of the unique source-to-sink path spelling the whole terminated text.
std::vector<EdgeId> text_path(const LCdawg& graph, const Text& text);

// Per-node number of paths to the sink.
std::vector<std::uint64_t> path_count(const LCdawg& graph);

}  // namespace lcdawg
