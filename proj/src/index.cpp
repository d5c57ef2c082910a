#include "lcdawg/index.hpp"

#include <algorithm>

#include "lcdawg/errors.hpp"

namespace lcdawg {
namespace {

// Polynomial fingerprints modulo the Mersenne prime 2^61 - 1.
class Fingerprints {
public:
    static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
    static constexpr std::uint64_t kBase = 0x1f3d5b79a2c4e6f1ULL % kMod;

    explicit Fingerprints(std::span<const Symbol> s) : prefix_(s.size() + 1, 0), power_(s.size() + 1, 1) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            prefix_[i + 1] = add(mul(prefix_[i], kBase), s[i] + 1u);
            power_[i + 1] = mul(power_[i], kBase);
        }
    }

    std::uint64_t window(std::uint64_t pos, std::uint64_t len) const {
        return sub(prefix_[pos + len], mul(prefix_[pos], power_[len]));
    }

    std::uint64_t power(std::uint64_t len) const { return power_[len]; }

    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
        return r >= kMod ? r - kMod : r;
    }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = a + b;
        return r >= kMod ? r - kMod : r;
    }
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

private:
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> power_;
};

void check_fingerprints(const Text& text, const LCdawg& graph, const Slp& slp,
                        std::span<const LabelSpan> spans) {
    auto s = text.terminated();
    Fingerprints fp(s);
    std::vector<std::uint64_t> h(slp.size());
    for (VarId x = 0; x < slp.size(); ++x) {
        const Production& p = slp.rule(x);
        if (slp.length(x) > s.size()) throw ConsistencyError("variable longer than the text");
        h[x] = p.pair ? Fingerprints::add(Fingerprints::mul(h[p.left], fp.power(slp.length(p.right))),
                                          h[p.right])
                      : p.symbol + 1u;
    }
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const Edge& ed = graph.edge(e);
        if (slp.length(ed.var) != ed.slen || h[ed.var] != fp.window(spans[e].pos, spans[e].len)) {
            throw ConsistencyError("variable of edge " + std::to_string(e) +
                                   " does not derive the edge label");
        }
    }
    if (slp.length(slp.root()) != s.size() || h[slp.root()] != fp.window(0, s.size())) {
        throw ConsistencyError("root variable does not derive the text");
    }
}

}  // namespace

BuildResult build_pipeline(const Text& text, const BuildOptions& options) {
    BuildResult out;
    out.cdawg = build_cdawg(text);
    LCdawgBuild lc = insert_type2_nodes(out.cdawg, text);
    out.spans = std::move(lc.spans);
    out.origin = std::move(lc.origin);
    out.jumps = compute_jump_links(lc.graph);
    out.text_path = text_path(lc.graph, text);
    Slp slp = build_slp(lc.graph, out.jumps, out.text_path);
    if (options.check_fingerprints) check_fingerprints(text, lc.graph, slp, out.spans);
    auto counts = path_count(lc.graph);
    out.index = Index(text.size(), static_cast<std::uint32_t>(text.sigma()), std::move(lc.graph),
                      std::move(slp), std::move(counts));
    return out;
}

Index Index::build(const Text& text, const BuildOptions& options) {
    return std::move(build_pipeline(text, options).index);
}

Index::Index(std::uint64_t n, std::uint32_t sigma, LCdawg graph, Slp slp,
             std::vector<std::uint64_t> counts)
    : n_(n), sigma_(sigma), graph_(std::move(graph)), slp_(std::move(slp)), counts_(std::move(counts)) {
    validate();
}

void Index::validate() const {
    graph_.validate();
    if (sigma_ > 255) throw ConsistencyError("alphabet larger than 255 symbols");
    if (sigma_ > n_) throw ConsistencyError("alphabet larger than the text");
    if (graph_.out_degree(graph_.source()) != std::size_t{sigma_} + 1) {
        throw ConsistencyError("alphabet size disagrees with the source out-degree");
    }
    if (slp_.size() == 0 || slp_.length(slp_.root()) != n_ + 1) {
        throw ConsistencyError("root variable does not have the text length");
    }
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
        const Edge& ed = graph_.edge(e);
        if (ed.var >= slp_.size()) throw ConsistencyError("edge variable out of range");
        if (slp_.length(ed.var) != ed.slen || slp_.first_char(ed.var) != ed.first) {
            throw ConsistencyError("edge variable disagrees with edge length or first symbol");
        }
        if (ed.first == kSentinel && ed.lo != graph_.sink()) {
            throw ConsistencyError("sentinel edge does not end at the sink");
        }
    }
    if (counts_.size() != graph_.node_count()) throw ConsistencyError("path count table size");
    if (counts_[graph_.sink()] != 1) throw ConsistencyError("sink path count is not 1");
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
        if (v == graph_.sink()) continue;
        std::uint64_t sum = 0;
        for (EdgeId e = graph_.first_edge(v); e < graph_.end_edge(v); ++e) {
            std::uint64_t c = counts_[graph_.edge(e).lo];
            if (c > n_ + 1 || sum + c > n_ + 1) throw ConsistencyError("path count overflow");
            sum += c;
        }
        if (counts_[v] != sum) throw ConsistencyError("path count of node " + std::to_string(v));
    }
    if (counts_[graph_.source()] != n_ + 1) throw ConsistencyError("source path count is not n+1");
}

std::optional<Locus> Index::locate(std::span<const Symbol> pattern) const {
    if (pattern.empty()) throw InputError("empty pattern");
    require_no_sentinel(pattern, "pattern");
    const std::uint64_t m = pattern.size();
    NodeId v = graph_.source();
    std::uint64_t i = 0;
    while (true) {
        auto e = graph_.find_child(v, pattern[i]);
        if (!e) return std::nullopt;
        const Edge& ed = graph_.edge(*e);
        ++i;
        std::uint64_t along = 1;
        if (along < ed.slen && i < m) {
            Slp::Cursor cur(slp_, ed.var, 2);
            while (along < ed.slen && i < m) {
                if (cur.next() != pattern[i]) return std::nullopt;
                ++along;
                ++i;
            }
        }
        if (i == m) return Locus{*e, ed.slen - along, m};
        v = ed.lo;
    }
}

OccurrenceList Index::find(std::span<const Symbol> pattern) const {
    OccurrenceList out;
    auto locus = locate(pattern);
    if (!locus) return out;
    out.reserve(counts_[graph_.edge(locus->edge).lo]);

    // Each path to the sink fixes the length r of the suffix following the
    // match, so the occurrence starts at (n + 1) - (m + r) + 1.
    const std::uint64_t base = n_ + 2 - locus->matched;
    std::vector<std::pair<NodeId, std::uint64_t>> stack{{graph_.edge(locus->edge).lo, locus->offset}};
    while (!stack.empty()) {
        auto [v, r] = stack.back();
        stack.pop_back();
        if (v == graph_.sink()) {
            out.push_back(base - r);
        } else if (!graph_.is_type1(v)) {
            const Skip& s = graph_.skip(v);
            stack.emplace_back(s.target, r + s.len);
        } else {
            for (EdgeId e = graph_.end_edge(v); e-- > graph_.first_edge(v);) {
                stack.emplace_back(graph_.edge(e).lo, r + graph_.edge(e).slen);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t Index::count(std::span<const Symbol> pattern) const {
    auto locus = locate(pattern);
    return locus ? counts_[graph_.edge(locus->edge).lo] : 0;
}

bool Index::exists(std::span<const Symbol> pattern) const { return locate(pattern).has_value(); }

std::string Index::extract(std::uint64_t i, std::uint64_t m) const {
    if (i < 1 || i > n_) {
        throw BoundsError("position " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "]");
    }
    return slp_.access(slp_.root(), i, std::min(m, n_ - i + 1));
}

}  // namespace lcdawg
