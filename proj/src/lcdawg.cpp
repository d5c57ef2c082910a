#include "lcdawg/lcdawg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcdawg/errors.hpp"

namespace lcdawg {
namespace {

[[noreturn]] void fail(const std::string& what) { throw ConsistencyError(what); }

}  // namespace

LCdawg::LCdawg(std::vector<NodeKind> kinds, std::vector<NodeId> slinks, std::vector<Skip> skips,
               std::vector<Edge> edges, std::vector<EdgeId>* order)
    : kind_(std::move(kinds)), slink_(std::move(slinks)), skip_(std::move(skips)) {
    const std::size_t nodes = kind_.size();
    if (slink_.size() != nodes || skip_.size() != nodes) fail("node table sizes differ");

    std::vector<EdgeId> perm(edges.size());
    std::iota(perm.begin(), perm.end(), EdgeId{0});
    std::stable_sort(perm.begin(), perm.end(), [&](EdgeId a, EdgeId b) {
        if (edges[a].hi != edges[b].hi) return edges[a].hi < edges[b].hi;
        return edges[a].first < edges[b].first;
    });
    edges_.reserve(edges.size());
    for (EdgeId e : perm) edges_.push_back(edges[e]);
    if (order != nullptr) *order = std::move(perm);

    edge_begin_.assign(nodes + 1, 0);
    for (const Edge& e : edges_) {
        if (e.hi >= nodes) fail("edge endpoint out of range");
        ++edge_begin_[e.hi + 1];
    }
    std::partial_sum(edge_begin_.begin(), edge_begin_.end(), edge_begin_.begin());

    type1_count_ = static_cast<std::size_t>(
        std::find_if(kind_.begin(), kind_.end(), [](NodeKind k) { return k != NodeKind::type1; }) -
        kind_.begin());
}

std::optional<EdgeId> LCdawg::find_child(NodeId v, Symbol c) const {
    auto first = edges_.begin() + edge_begin_[v];
    auto last = edges_.begin() + edge_begin_[v + 1];
    auto it = std::lower_bound(first, last, c,
                               [](const Edge& e, Symbol x) { return e.first < x; });
    if (it == last || it->first != c) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

void LCdawg::validate() const {
    const std::size_t nodes = node_count();
    if (nodes < 2) fail("graph needs a source and a sink");
    if (!is_type1(kSource) || !is_type1(kSink)) fail("source and sink must be type-1");
    for (NodeId v = 0; v < nodes; ++v) {
        NodeKind k = kind_[v];
        if (k != NodeKind::type1 && k != NodeKind::type2) fail("unknown node kind");
        if (k == NodeKind::type1 && v >= type1_count_) fail("type-1 node after type-2 nodes");
    }

    std::vector<std::uint32_t> indegree(nodes, 0);
    for (NodeId v = 0; v < nodes; ++v) {
        for (EdgeId e = first_edge(v); e < end_edge(v); ++e) {
            const Edge& ed = edges_[e];
            if (ed.hi != v) fail("edge grouped under the wrong node");
            if (ed.lo >= nodes) fail("edge target out of range");
            if (ed.slen == 0) fail("edge with empty label");
            if (e > first_edge(v) && edges_[e - 1].first >= ed.first) {
                fail("sibling edges not strictly sorted by first symbol");
            }
            if (v == kSource && ed.slen != 1) fail("source edge is not atomic");
            ++indegree[ed.lo];
        }
    }

    for (NodeId v = 0; v < nodes; ++v) {
        std::size_t deg = out_degree(v);
        if (v == kSink) {
            if (deg != 0) fail("sink has out-edges");
        } else if (!is_type1(v)) {
            if (deg != 1) fail("type-2 node " + std::to_string(v) + " is branching");
        } else if (v != kSource && deg < 2) {
            fail("type-1 node " + std::to_string(v) + " is not branching");
        } else if (v == kSource && deg == 0) {
            fail("source has no out-edges");
        }

        if (v == kSource) {
            if (slink_[v] != kNoNode) fail("source has a suffix link");
            if (indegree[v] != 0) fail("source has in-edges");
        } else {
            if (slink_[v] >= nodes) fail("suffix link out of range");
            if (!is_type1(slink_[v])) fail("suffix link to a type-2 node");
            if (indegree[v] == 0) fail("unreachable node " + std::to_string(v));
        }

        if (is_type1(v)) continue;
        const Skip& s = skip_[v];
        if (s.target >= nodes || !is_type1(s.target)) fail("skip target is not type-1");
        const Edge& out = edges_[first_edge(v)];
        bool ok = is_type1(out.lo)
                      ? (s.target == out.lo && s.len == out.slen)
                      : (s.target == skip_[out.lo].target && s.len == out.slen + skip_[out.lo].len);
        if (!ok) fail("skip shortcut inconsistent with its chain");
    }

    // Kahn's algorithm; every node must be consumed.
    std::vector<NodeId> queue{kSource};
    std::size_t seen = 0;
    while (seen < queue.size()) {
        NodeId v = queue[seen++];
        for (EdgeId e = first_edge(v); e < end_edge(v); ++e) {
            if (--indegree[edges_[e].lo] == 0) queue.push_back(edges_[e].lo);
        }
    }
    if (seen != nodes) fail("graph contains a cycle");
}

LCdawgBuild insert_type2_nodes(const Cdawg& cdawg, const Text& text) {
    auto s = text.terminated();
    const std::size_t type1 = cdawg.node_count();

    std::vector<NodeKind> kinds(type1, NodeKind::type1);
    std::vector<NodeId> slinks(type1);
    for (NodeId v = 0; v < type1; ++v) slinks[v] = cdawg.slink(v);

    std::vector<Edge> edges;
    std::vector<LabelSpan> spans;
    std::vector<EdgeId> origin;
    edges.reserve(cdawg.edge_count());

    // Cut offsets on the current CDAWG edge and the type-1 node inducing each.
    std::vector<std::pair<std::uint64_t, NodeId>> cuts;

    // Spell s[pos, pos + len) from `w`, recording every type-1 node passed in
    // the interior of the walk (offset shifted by `base`).
    auto walk = [&](NodeId w, std::uint64_t pos, std::uint64_t len, std::uint64_t base) {
        std::uint64_t done = 0;
        while (done < len) {
            auto f = cdawg.find_child(w, s[pos + done]);
            if (!f) fail("suffix walk cannot continue from node " + std::to_string(w));
            const CdawgEdge& fe = cdawg.edge(*f);
            done += fe.label.len;
            if (done > len) fail("suffix walk ends inside an edge");
            w = fe.lo;
            if (done < len) cuts.emplace_back(base + done, w);
        }
    };

    for (EdgeId ce = 0; ce < cdawg.edge_count(); ++ce) {
        const CdawgEdge& e = cdawg.edge(ce);
        cuts.clear();
        if (e.label.len >= 2) {
            if (e.hi == cdawg.source()) {
                // slink(source) acts as an auxiliary node with an atomic edge
                // to the source for every symbol.
                cuts.emplace_back(1, cdawg.source());
                walk(cdawg.source(), e.label.pos + 1, e.label.len - 1, 1);
            } else {
                walk(cdawg.slink(e.hi), e.label.pos, e.label.len, 0);
            }
        }

        NodeId hi = e.hi;
        std::uint64_t prev = 0;
        for (auto [offset, inducer] : cuts) {
            auto t = static_cast<NodeId>(kinds.size());
            kinds.push_back(NodeKind::type2);
            slinks.push_back(inducer);
            edges.push_back(Edge{hi, t, s[e.label.pos + prev], offset - prev, kNoVar});
            spans.push_back(LabelSpan{e.label.pos + prev, offset - prev});
            origin.push_back(ce);
            hi = t;
            prev = offset;
        }
        edges.push_back(Edge{hi, e.lo, s[e.label.pos + prev], e.label.len - prev, kNoVar});
        spans.push_back(LabelSpan{e.label.pos + prev, e.label.len - prev});
        origin.push_back(ce);
    }

    const std::size_t nodes = kinds.size();
    std::vector<Skip> skips(nodes);
    // A type-2 node's unique out-edge is the edge created right after its in-edge.
    std::vector<EdgeId> out_of(nodes, kNoEdge);
    for (EdgeId e = 0; e < edges.size(); ++e) {
        if (edges[e].hi >= type1) out_of[edges[e].hi] = e;
    }
    for (NodeId t = static_cast<NodeId>(nodes); t-- > type1;) {
        const Edge& out = edges[out_of[t]];
        skips[t] = out.lo < type1 ? Skip{out.lo, out.slen}
                                  : Skip{skips[out.lo].target, out.slen + skips[out.lo].len};
    }

    std::vector<EdgeId> order;
    LCdawg graph(std::move(kinds), std::move(slinks), std::move(skips), std::move(edges), &order);
    LCdawgBuild out;
    out.spans.reserve(order.size());
    out.origin.reserve(order.size());
    for (EdgeId old : order) {
        out.spans.push_back(spans[old]);
        out.origin.push_back(origin[old]);
    }
    out.graph = std::move(graph);
    return out;
}

EdgePath chain_from(const LCdawg& graph, EdgeId first) {
    EdgePath path;
    EdgeId e = first;
    while (true) {
        path.edges.push_back(e);
        path.slen += graph.edge(e).slen;
        NodeId lo = graph.edge(e).lo;
        if (graph.is_type1(lo)) break;
        e = graph.first_edge(lo);
    }
    return path;
}

EdgePath edge_suffix_link(const LCdawg& graph, EdgeId e) {
    const Edge& ed = graph.edge(e);
    if (ed.slen < 2) throw InputError("edge suffix link needs a label of length >= 2");
    NodeId from = graph.slink(ed.hi);
    if (from == kNoNode) fail("edge of length >= 2 leaves the source");
    auto first = graph.find_child(from, ed.first);
    if (!first) fail("no edge from slink(hi) with the edge's first symbol");
    EdgePath path = chain_from(graph, *first);
    if (path.slen != ed.slen) {
        fail("edge suffix link of edge " + std::to_string(e) + " spells " +
             std::to_string(path.slen) + " symbols instead of " + std::to_string(ed.slen));
    }
    return path;
}

JumpTable compute_jump_links(const LCdawg& graph) {
    enum class State : std::uint8_t { fresh, active, done };
    const std::size_t m = graph.edge_count();
    JumpTable table(m, kNoEdge);
    std::vector<State> state(m, State::fresh);
    std::vector<EdgeId> stack;

    // The first edge of e-suf(e); same length means e-suf(e) is a single edge.
    auto suffix_edge = [&](EdgeId e) {
        const Edge& ed = graph.edge(e);
        NodeId from = graph.slink(ed.hi);
        if (from == kNoNode) fail("edge of length >= 2 leaves the source");
        auto f = graph.find_child(from, ed.first);
        if (!f) fail("no edge from slink(hi) with the edge's first symbol");
        if (graph.edge(*f).slen > ed.slen) fail("edge suffix link overshoots the label");
        return *f;
    };

    for (EdgeId start = 0; start < m; ++start) {
        if (graph.edge(start).slen < 2 || state[start] == State::done) continue;
        stack.push_back(start);
        state[start] = State::active;
        while (!stack.empty()) {
            EdgeId e = stack.back();
            EdgeId f = suffix_edge(e);
            if (graph.edge(f).slen < graph.edge(e).slen) {
                table[e] = f;
            } else if (state[f] == State::done) {
                table[e] = table[f];
            } else if (state[f] == State::active) {
                fail("cycle in the jump-link recursion at edge " + std::to_string(f));
            } else {
                state[f] = State::active;
                stack.push_back(f);
                continue;
            }
            state[e] = State::done;
            stack.pop_back();
        }
    }
    return table;
}

EdgePath jump(const LCdawg& graph, const JumpTable& table, EdgeId e) {
    if (table[e] == kNoEdge) throw InputError("jump is defined only for edges of length >= 2");
    return chain_from(graph, table[e]);
}

std::vector<EdgeId> text_path(const LCdawg& graph, const Text& text) {
    auto s = text.terminated();
    std::vector<EdgeId> path;
    NodeId v = graph.source();
    std::uint64_t pos = 0;
    while (v != graph.sink()) {
        auto e = graph.find_child(v, s[pos]);
        if (!e) fail("text is not spelled by the graph");
        path.push_back(*e);
        pos += graph.edge(*e).slen;
        v = graph.edge(*e).lo;
    }
    if (pos != s.size()) fail("text path length differs from the text length");
    return path;
}

std::vector<std::uint64_t> path_count(const LCdawg& graph) {
    const std::size_t nodes = graph.node_count();
    std::vector<std::uint32_t> outdeg(nodes);
    std::vector<std::vector<NodeId>> parents(nodes);
    for (NodeId v = 0; v < nodes; ++v) outdeg[v] = static_cast<std::uint32_t>(graph.out_degree(v));
    for (const Edge& e : graph.edges()) parents[e.lo].push_back(e.hi);

    std::vector<std::uint64_t> count(nodes, 0);
    std::vector<NodeId> queue{graph.sink()};
    count[graph.sink()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        for (NodeId p : parents[v]) {
            count[p] += count[v];
            if (--outdeg[p] == 0) queue.push_back(p);
        }
    }
    return count;
}

}  // namespace lcdawg
