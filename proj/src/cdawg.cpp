#include "lcdawg/cdawg.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "lcdawg/errors.hpp"

namespace lcdawg {
namespace {

// Ukkonen's online suffix tree. Only used as the first construction stage;
// the CDAWG is obtained by merging nodes with equal end-position sets.
// Children form sibling lists sorted by symbol; nodes with many children
// (and the root) switch to a direct table indexed by symbol.
class SuffixTree {
public:
    struct Node {
        std::int32_t start = 0;
        std::int32_t end = 0;  // exclusive; kLeafEnd for leaves
        std::int32_t slink = 0;
        std::int32_t child = kNil;  // list head, or -(table + 2) for wide nodes
        std::int32_t sibling = kNil;
        // String depth (internal nodes) or suffix start (leaves) until
        // annotate(), which turns leaf values into string depths.
        std::int32_t depth = 0;
    };

    static constexpr std::int32_t kLeafEnd = -1;
    static constexpr std::int32_t kNil = -1;
    static constexpr std::int32_t kRoot = 0;
    static constexpr int kWide = 16;

    explicit SuffixTree(std::span<const Symbol> s) : s_(s) {
        nodes_.reserve(2 * s.size() + 1);
        parent_.reserve(2 * s.size() + 1);
        nodes_.push_back(Node{0, 0, 0, kNil, kNil, 0});
        parent_.push_back(kNil);
        widen(kRoot);
        for (std::size_t i = 0; i < s.size(); ++i) extend(static_cast<std::int32_t>(i));
        leaf_end_ = static_cast<std::int32_t>(s.size());
        annotate();
    }

    // Calls f(child) in increasing symbol order.
    template <class F>
    void for_each_child(std::int32_t v, F f) const {
        std::int32_t head = nodes_[v].child;
        if (head <= -2) {
            for (std::int32_t c : tables_[-head - 2]) {
                if (c != kNil) f(c);
            }
            return;
        }
        for (std::int32_t x = head; x != kNil; x = nodes_[x].sibling) f(x);
    }

    std::int32_t size() const { return static_cast<std::int32_t>(nodes_.size()); }
    const Node& node(std::int32_t v) const { return nodes_[v]; }
    bool is_leaf(std::int32_t v) const { return nodes_[v].end == kLeafEnd; }
    std::int32_t edge_len(std::int32_t v) const {
        return (is_leaf(v) ? leaf_end_ : nodes_[v].end) - nodes_[v].start;
    }
    Symbol symbol(std::int32_t v) const { return s_[nodes_[v].start]; }
    std::int32_t leaves(std::int32_t v) const { return leaves_[v]; }
    std::int32_t occ(std::int32_t v) const { return occ_[v]; }

private:
    // Leaf counts bottom-up over internal nodes sorted by decreasing depth.
    void annotate() {
        const std::int32_t total = leaf_end_;
        const auto count = static_cast<std::int32_t>(nodes_.size());
        std::vector<std::int32_t> bucket(static_cast<std::size_t>(total) + 2, 0);
        leaves_.assign(static_cast<std::size_t>(count), 0);
        occ_.assign(static_cast<std::size_t>(count), total);
        for (std::int32_t v = 0; v < count; ++v) {
            Node& x = nodes_[v];
            if (x.end == kLeafEnd) {
                occ_[v] = x.depth;
                x.depth = total - x.depth;
                leaves_[v] = 1;
            } else {
                ++bucket[x.depth];
            }
        }
        for (std::int32_t d = total; d >= 0; --d) bucket[d] += bucket[d + 1];
        std::vector<std::int32_t> order(bucket[0]);
        for (std::int32_t v = 0; v < count; ++v) {
            if (nodes_[v].end != kLeafEnd) order[--bucket[nodes_[v].depth]] = v;
        }
        for (std::int32_t v = 0; v < count; ++v) {
            if (nodes_[v].end != kLeafEnd) continue;
            std::int32_t p = parent_[v];
            leaves_[p] += 1;
            occ_[p] = std::min(occ_[p], occ_[v]);
        }
        for (std::int32_t v : order) {
            if (v == kRoot) continue;
            std::int32_t p = parent_[v];
            leaves_[p] += leaves_[v];
            occ_[p] = std::min(occ_[p], occ_[v]);
        }
    }

    using Table = std::array<std::int32_t, 256>;

    std::int32_t* table(std::int32_t v) {
        std::int32_t head = nodes_[v].child;
        return head <= -2 ? tables_[-head - 2].data() : nullptr;
    }

    void widen(std::int32_t v) {
        Table t;
        t.fill(kNil);
        for (std::int32_t x = nodes_[v].child; x != kNil; x = nodes_[x].sibling) t[symbol(x)] = x;
        tables_.push_back(t);
        nodes_[v].child = -static_cast<std::int32_t>(tables_.size()) - 1;
    }

    std::int32_t find(std::int32_t v, Symbol c) const {
        std::int32_t head = nodes_[v].child;
        if (head <= -2) return tables_[-head - 2][c];
        for (std::int32_t x = head; x != kNil; x = nodes_[x].sibling) {
            Symbol d = symbol(x);
            if (d == c) return x;
            if (d > c) break;
        }
        return kNil;
    }

    void insert_child(std::int32_t v, std::int32_t child) {
        Symbol c = symbol(child);
        if (std::int32_t* t = table(v)) {
            t[c] = child;
            return;
        }
        std::int32_t* link = &nodes_[v].child;
        int degree = 0;
        while (*link != kNil && symbol(*link) < c) {
            link = &nodes_[*link].sibling;
            ++degree;
        }
        nodes_[child].sibling = *link;
        *link = child;
        for (std::int32_t x = nodes_[child].sibling; x != kNil && degree <= kWide; x = nodes_[x].sibling) ++degree;
        if (degree >= kWide) widen(v);
    }

    // Puts `fresh` in place of the child `old` of `v`.
    void replace_child(std::int32_t v, std::int32_t old, std::int32_t fresh) {
        if (std::int32_t* t = table(v)) {
            t[symbol(old)] = fresh;
            return;
        }
        std::int32_t* link = &nodes_[v].child;
        while (*link != old) link = &nodes_[*link].sibling;
        nodes_[fresh].sibling = nodes_[old].sibling;
        *link = fresh;
    }

    std::int32_t new_node(std::int32_t start, std::int32_t end, std::int32_t parent, std::int32_t depth) {
        nodes_.push_back(Node{start, end, kRoot, kNil, kNil, depth});
        parent_.push_back(parent);
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    std::int32_t current_len(std::int32_t v, std::int32_t i) const {
        std::int32_t end = is_leaf(v) ? i + 1 : nodes_[v].end;
        return end - nodes_[v].start;
    }

    void extend(std::int32_t i) {
        ++remainder_;
        std::int32_t last_new = kNil;
        while (remainder_ > 0) {
            if (active_len_ == 0) active_edge_ = i;
            std::int32_t next = find(active_node_, s_[active_edge_]);
            if (next == kNil) {
                insert_child(active_node_, new_node(i, kLeafEnd, active_node_, i - nodes_[active_node_].depth));
                if (last_new != kNil) {
                    nodes_[last_new].slink = active_node_;
                    last_new = kNil;
                }
            } else {
                std::int32_t len = current_len(next, i);
                if (active_len_ >= len) {
                    active_edge_ += len;
                    active_len_ -= len;
                    active_node_ = next;
                    continue;
                }
                if (s_[nodes_[next].start + active_len_] == s_[i]) {
                    if (last_new != kNil && active_node_ != kRoot) {
                        nodes_[last_new].slink = active_node_;
                        last_new = kNil;
                    }
                    ++active_len_;
                    break;
                }
                std::int32_t split_start = nodes_[next].start;
                const std::int32_t split_depth = nodes_[active_node_].depth + active_len_;
                std::int32_t split = new_node(split_start, split_start + active_len_, active_node_, split_depth);
                replace_child(active_node_, next, split);
                std::int32_t leaf = new_node(i, kLeafEnd, split, i - split_depth);
                nodes_[next].start += active_len_;
                parent_[next] = split;
                nodes_[next].sibling = kNil;
                auto [lo, hi] = symbol(leaf) < symbol(next) ? std::pair{leaf, next} : std::pair{next, leaf};
                nodes_[split].child = lo;
                nodes_[lo].sibling = hi;
                if (last_new != kNil) nodes_[last_new].slink = split;
                last_new = split;
            }
            --remainder_;
            if (active_node_ == kRoot && active_len_ > 0) {
                --active_len_;
                active_edge_ = i - remainder_ + 1;
            } else if (active_node_ != kRoot) {
                active_node_ = nodes_[active_node_].slink;
            }
        }
    }

    std::span<const Symbol> s_;
    std::vector<Node> nodes_;
    std::vector<Table> tables_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> leaves_;
    std::vector<std::int32_t> occ_;
    std::int32_t active_node_ = kRoot;
    std::int32_t active_edge_ = 0;
    std::int32_t active_len_ = 0;
    std::int32_t remainder_ = 0;
    std::int32_t leaf_end_ = 0;
};

}  // namespace

std::optional<EdgeId> Cdawg::find_child(NodeId v, Symbol c) const {
    auto first = edges_.begin() + edge_begin_[v];
    auto last = edges_.begin() + edge_begin_[v + 1];
    auto it = std::lower_bound(first, last, c,
                               [](const CdawgEdge& e, Symbol x) { return e.first < x; });
    if (it == last || it->first != c) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::string Cdawg::value(NodeId v, const Text& text) const {
    return label_string(text, LabelSpan{occurrence_[v], depth_[v]});
}

std::vector<NodeId> Cdawg::topological_order() const {
    std::vector<NodeId> order(node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return depth_[a] < depth_[b]; });
    return order;
}

std::string label_string(const Text& text, LabelSpan span) {
    auto s = text.terminated();
    if (span.pos + span.len > s.size()) throw BoundsError("label span outside text");
    return {reinterpret_cast<const char*>(s.data() + span.pos), span.len};
}

Cdawg build_cdawg(const Text& text) {
    auto s = text.terminated();
    if (s.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw InputError("text longer than " + std::to_string(std::numeric_limits<std::int32_t>::max() - 2) +
                         " symbols");
    }
    const auto total = static_cast<std::int32_t>(s.size());
    const SuffixTree tree(s);
    const std::int32_t count = tree.size();

    // Internal nodes with equal leaf counts along a suffix-link chain share an
    // end-position set and collapse into one CDAWG node; all leaves form the
    // sink. Each chain is walked once from its longest member.
    auto merges = [&](std::int32_t v) {
        std::int32_t link = tree.node(v).slink;
        return link != SuffixTree::kRoot && tree.leaves(link) == tree.leaves(v);
    };
    std::vector<std::uint8_t> inner(count, 0);
    for (std::int32_t v = 1; v < count; ++v) {
        if (!tree.is_leaf(v) && merges(v)) {
            if (inner[tree.node(v).slink]) throw ConsistencyError("suffix-link chains overlap");
            inner[tree.node(v).slink] = 1;
        }
    }
    std::vector<NodeId> cls(count, kNoNode);
    std::vector<std::int32_t> rep{SuffixTree::kRoot, -1};
    std::vector<std::int32_t> shortest{SuffixTree::kRoot, -1};
    cls[SuffixTree::kRoot] = Cdawg::kSource;
    for (std::int32_t v = 1; v < count; ++v) {
        if (tree.is_leaf(v)) {
            cls[v] = Cdawg::kSink;
            continue;
        }
        if (inner[v]) continue;
        const auto c = static_cast<NodeId>(rep.size());
        rep.push_back(v);
        std::int32_t u = v;
        cls[u] = c;
        while (merges(u)) {
            u = tree.node(u).slink;
            cls[u] = c;
        }
        shortest.push_back(u);
    }
    for (std::int32_t v = 0; v < count; ++v) {
        if (cls[v] == kNoNode) throw ConsistencyError("suffix-link chains form a cycle");
    }

    Cdawg g;
    const std::size_t nodes = rep.size();
    g.depth_.assign(nodes, 0);
    g.occurrence_.assign(nodes, 0);
    g.slink_.assign(nodes, kNoNode);
    g.depth_[Cdawg::kSink] = static_cast<std::uint64_t>(total);
    g.occurrence_[Cdawg::kSink] = 0;
    g.slink_[Cdawg::kSink] = Cdawg::kSource;
    for (NodeId c = 0; c < nodes; ++c) {
        if (c == Cdawg::kSink) continue;
        std::int32_t r = rep[c];
        g.depth_[c] = static_cast<std::uint64_t>(tree.node(r).depth);
        g.occurrence_[c] = static_cast<std::uint64_t>(tree.occ(r));
        if (c != Cdawg::kSource) g.slink_[c] = cls[tree.node(shortest[c]).slink];
    }

    g.edge_begin_.assign(nodes + 1, 0);
    for (NodeId c = 0; c < nodes; ++c) {
        g.edge_begin_[c] = static_cast<EdgeId>(g.edges_.size());
        if (c == Cdawg::kSink) continue;
        tree.for_each_child(rep[c], [&](std::int32_t x) {
            auto start = static_cast<std::uint64_t>(tree.node(x).start);
            auto len = static_cast<std::uint64_t>(tree.edge_len(x));
            g.edges_.push_back(CdawgEdge{c, cls[x], tree.symbol(x), LabelSpan{start, len}});
        });
    }
    g.edge_begin_[nodes] = static_cast<EdgeId>(g.edges_.size());
    return g;
}

std::vector<std::uint64_t> path_count(const Cdawg& cdawg) {
    std::vector<std::uint64_t> count(cdawg.node_count(), 0);
    auto order = cdawg.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId v = *it;
        if (v == cdawg.sink()) {
            count[v] = 1;
            continue;
        }
        for (EdgeId e = cdawg.first_edge(v); e < cdawg.end_edge(v); ++e) {
            count[v] += count[cdawg.edge(e).lo];
        }
    }
    return count;
}

}  // namespace lcdawg
