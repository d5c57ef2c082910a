#include "lcdawg/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <ostream>
#include <sstream>

#include "lcdawg/errors.hpp"
#include "lcdawg/index.hpp"
#include "lcdawg/measures.hpp"
#include "lcdawg/oracles.hpp"
#include "lcdawg/persistence.hpp"

namespace lcdawg::verify {

void Report::record(const std::string& name, bool ok, const std::string& detail) {
    Property& p = properties_[name];
    ++p.checked;
    if (!ok) {
        if (p.failed == 0) p.first_failure = detail;
        ++p.failed;
    }
}

void Report::observe(const std::string& name, double value) {
    auto [it, fresh] = observed_.emplace(name, value);
    if (!fresh) it->second = std::max(it->second, value);
}

bool Report::ok() const {
    return std::all_of(properties_.begin(), properties_.end(),
                       [](const auto& kv) { return kv.second.failed == 0; });
}

bool Report::ok(const std::string& name) const {
    auto it = properties_.find(name);
    return it != properties_.end() && it->second.failed == 0;
}

void Report::print(std::ostream& out) const {
    for (const auto& [name, p] : properties_) {
        out << (p.failed == 0 ? "PASS " : "FAIL ") << std::left << std::setw(28) << name << " checked="
            << p.checked << " failed=" << p.failed;
        if (p.failed != 0) out << "  first: " << p.first_failure;
        out << '\n';
    }
    for (const auto& [name, v] : observed_) out << "     " << std::left << std::setw(28) << name << " max=" << v << '\n';
}

namespace {

std::string escaped(std::string_view s, std::size_t limit = 40) {
    std::ostringstream out;
    out << '"';
    for (std::size_t i = 0; i < std::min(s.size(), limit); ++i) {
        auto c = static_cast<unsigned char>(s[i]);
        if (c >= 0x20 && c < 0x7f && c != '"' && c != '\\') {
            out << static_cast<char>(c);
        } else {
            out << "\\x" << std::hex << std::setw(2) << std::setfill('0') << int{c} << std::dec;
        }
    }
    if (s.size() > limit) out << "...(" << s.size() << ")";
    out << '"';
    return out.str();
}

class Checker {
public:
    Checker(const Text& text, const Options& options, std::uint64_t seed, Report& report)
        : text_(text), opt_(options), rng_(seed), report_(report),
          body_(text.body_string()), tag_(" text=" + escaped(body_)) {}

    void run() {
        try {
            built_ = build_pipeline(text_);
        } catch (const Error& e) {
            report_.record("build", false, e.what() + tag_);
            return;
        }
        report_.record("build", true);
        stats_ = measure_build(built_, text_);
        cdawg_structure();
        if (text_.size() <= opt_.max_oracle_n) cdawg_oracles();
        transform_structure();
        bound_checks();
        slp_checks();
        measure_checks();
        queries();
        extraction();
    }

private:
    std::string lab(LabelSpan span) const { return label_string(text_, span); }

    void cdawg_structure() {
        const Cdawg& g = built_.cdawg;
        bool ok = g.out_degree(g.sink()) == 0;
        std::string why;
        std::vector<std::uint32_t> indeg(g.node_count(), 0);
        for (NodeId v = 0; v < g.node_count() && ok; ++v) {
            if (v != g.source() && v != g.sink() && g.out_degree(v) < 2) why = "non-branching node", ok = false;
            for (EdgeId e = g.first_edge(v); e < g.end_edge(v); ++e) {
                const CdawgEdge& ed = g.edge(e);
                ++indeg[ed.lo];
                if (e > g.first_edge(v) && g.edge(e - 1).first >= ed.first) why = "sibling order", ok = false;
                if (g.depth(ed.lo) < g.depth(v) + ed.label.len) why = "depth along edge", ok = false;
            }
            if (v != g.source() && g.depth(g.slink(v)) >= g.depth(v)) why = "slink depth", ok = false;
        }
        ok = ok && indeg[g.source()] == 0;
        for (NodeId v = 0; v < g.node_count() && ok; ++v) {
            if (v != g.source() && indeg[v] == 0) why = "second source", ok = false;
            NodeId w = v;
            std::size_t steps = 0;
            while (ok && w != g.source() && steps++ <= g.node_count()) w = g.slink(w);
            if (w != g.source()) why = "slink chain", ok = false;
        }
        auto counts = path_count(g);
        if (counts[g.source()] != text_.size() + 1) why = "count(source) != n+1", ok = false;
        report_.record("cdawg.structure", ok, why + tag_);
    }

    void cdawg_oracles() {
        const Cdawg& g = built_.cdawg;
        auto automaton = oracle::brute_minimal_automaton(text_, opt_.max_oracle_n);
        std::set<std::string> values;
        for (NodeId v = 0; v < g.node_count(); ++v) values.insert(g.value(v, text_));
        bool same = automaton.node_count == g.node_count() && automaton.edge_count == g.edge_count() &&
                    automaton.values == values;
        report_.record("cdawg.minimality", same,
                       "nodes " + std::to_string(g.node_count()) + " vs " + std::to_string(automaton.node_count) +
                           ", edges " + std::to_string(g.edge_count()) + " vs " +
                           std::to_string(automaton.edge_count) + tag_);

        auto terminated = oracle::brute_maximal_repeats(text_, true, opt_.max_oracle_n);
        report_.record("cdawg.right_extensions", terminated.right_extensions == g.edge_count(),
                       std::to_string(terminated.right_extensions) + " vs " + std::to_string(g.edge_count()) + tag_);
        report_.record("cdawg.maximal_repeats", terminated.nonempty() == g.node_count() - 2, tag_);

        auto plain = oracle::brute_maximal_repeats(text_, false, opt_.max_oracle_n);
        bool measures = plain.nonempty() == stats_.mu && plain.right_extensions == stats_.e_r &&
                        plain.left_extensions == stats_.e_l;
        report_.record("measures.oracle", measures,
                       "mu/e_r/e_l " + std::to_string(stats_.mu) + "/" + std::to_string(stats_.e_r) + "/" +
                           std::to_string(stats_.e_l) + " vs " + std::to_string(plain.nonempty()) + "/" +
                           std::to_string(plain.right_extensions) + "/" + std::to_string(plain.left_extensions) +
                           tag_);
    }

    void transform_structure() {
        const LCdawg& g = built_.index.graph();
        const Cdawg& c = built_.cdawg;

        // Contracting type-2 chains gives back the CDAWG edge for edge.
        bool ok = true;
        std::size_t type1_edges = 0;
        for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
            if (!g.is_type1(g.edge(e).hi)) continue;
            ++type1_edges;
            EdgePath p = chain_from(g, e);
            const CdawgEdge& ce = c.edge(built_.origin[e]);
            ok = ce.hi == g.edge(e).hi && ce.lo == g.edge(p.edges.back()).lo && ce.label.len == p.slen &&
                 ce.label.pos == built_.spans[e].pos && ce.first == g.edge(e).first;
            for (EdgeId f : p.edges) ok = ok && built_.origin[f] == built_.origin[e];
        }
        report_.record("lcdawg.collapse", ok && type1_edges == c.edge_count(), tag_);

        bool skips = true;
        for (NodeId t = static_cast<NodeId>(g.type1_count()); t < g.node_count() && skips; ++t) {
            EdgePath p = chain_from(g, g.first_edge(t));
            skips = g.skip(t).target == g.edge(p.edges.back()).lo && g.skip(t).len == p.slen;
        }
        report_.record("lcdawg.skip", skips, tag_);

        bool atomic = true;
        for (EdgeId e = g.first_edge(g.source()); e < g.end_edge(g.source()); ++e) atomic = atomic && g.edge(e).slen == 1;
        report_.record("lcdawg.source_atomic", atomic, tag_);
    }

    void bound_checks() {
        const LCdawg& g = built_.index.graph();
        if (text_.size() >= 2) {
            bool t2 = g.type2_count() <= stats_.e_l;
            bool nodes = g.node_count() <= 2 * (stats_.mu + stats_.e_l);
            bool edges = g.edge_count() <= 2 * stats_.e_tilde;
            report_.record("bounds.type2_le_e_l", t2,
                           std::to_string(g.type2_count()) + " > " + std::to_string(stats_.e_l) + tag_);
            report_.record("bounds.nodes", nodes, std::to_string(g.node_count()) + tag_);
            report_.record("bounds.edges", edges, std::to_string(g.edge_count()) + tag_);
            if (stats_.mu + stats_.e_l > 0) {
                report_.observe("ratio.nodes/(mu+e_l)",
                                static_cast<double>(g.node_count()) / static_cast<double>(stats_.mu + stats_.e_l));
            }
            report_.observe("ratio.edges/e_tilde",
                            static_cast<double>(g.edge_count()) / static_cast<double>(stats_.e_tilde));
        }

        bool esuf_ok = true;
        bool jump_ok = true;
        std::string why;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.slen < 2) continue;
            try {
                EdgePath p = edge_suffix_link(g, e);
                bool typed = g.is_type1(g.edge(p.edges.front()).hi) && g.is_type1(g.edge(p.edges.back()).lo) &&
                             g.edge(p.edges.front()).hi == g.slink(ed.hi);
                for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) typed = typed && !g.is_type1(g.edge(p.edges[i]).lo);
                if (typed && opt_.check_labels) typed = spelled(p) == lab(built_.spans[e]);
                if (!typed && esuf_ok) why = "edge " + std::to_string(e);
                esuf_ok = esuf_ok && typed;

                EdgePath j = jump(g, built_.jumps, e);
                bool good = j.edges.size() >= 2 && j.slen == ed.slen;
                if (good && opt_.check_labels) good = spelled(j) == lab(built_.spans[e]);
                jump_ok = jump_ok && good;
            } catch (const Error& err) {
                esuf_ok = false;
                why = err.what();
            }
        }
        report_.record("esuf.typing", esuf_ok, why + tag_);
        report_.record("jump.length", jump_ok, tag_);
    }

    std::string spelled(const EdgePath& p) const {
        std::string s;
        for (EdgeId f : p.edges) s += lab(built_.spans[f]);
        return s;
    }

    void slp_checks() {
        const Index& idx = built_.index;
        const Slp& slp = idx.slp();
        const LCdawg& g = idx.graph();
        if (opt_.check_labels) {
            bool ok = true;
            EdgeId bad = kNoEdge;
            for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
                const Edge& ed = g.edge(e);
                ok = slp.expand_prefix(ed.var, ed.slen) == lab(built_.spans[e]) && slp.length(ed.var) == ed.slen &&
                     slp.first_char(ed.var) == ed.first;
                if (!ok) bad = e;
            }
            report_.record("slp.edge_labels", ok, "edge " + std::to_string(bad) + tag_);
        }
        auto s = text_.terminated();
        std::string whole(reinterpret_cast<const char*>(s.data()), s.size());
        report_.record("slp.root", slp.expand_prefix(slp.root(), s.size()) == whole, tag_);

        if (text_.size() >= 1) {
            report_.record("slp.size", slp.size() <= 8 * stats_.e_tilde,
                           std::to_string(slp.size()) + " > 8*" + std::to_string(stats_.e_tilde) + tag_);
            report_.observe("ratio.productions/e_tilde",
                            static_cast<double>(slp.size()) / static_cast<double>(stats_.e_tilde));
        }
        report_.observe("grammar_height", slp.height());

        // Edges with the same jump path share the whole intermediate chain.
        std::map<EdgeId, VarId> tail_of;
        bool shared = true;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).slen < 2) continue;
            const Production& p = slp.rule(g.edge(e).var);
            auto [it, fresh] = tail_of.emplace(built_.jumps[e], p.right);
            shared = shared && p.pair && p.left == g.edge(built_.jumps[e]).var && it->second == p.right;
        }
        report_.record("slp.chain_sharing", shared, tag_);
    }

    void measure_checks() {
        const std::uint64_t n = text_.size();
        auto z = oracle::lz77_parse(text_.body()).size();
        auto r = oracle::bwt_runs(text_.terminated());
        std::ostringstream why;
        why << "n=" << n << " mu=" << stats_.mu << " e_tilde=" << stats_.e_tilde << " z=" << z << " r=" << r << tag_;
        bool ok = true;
        if (n >= 1) ok = ok && stats_.mu < n && z <= stats_.e_tilde && r <= stats_.e_tilde;
        if (n >= 2) ok = ok && stats_.e_tilde <= 4 * n - 4 && stats_.e_r <= 2 * n - 1;
        report_.record("measures.inequalities", ok, why.str());
    }

    std::vector<std::string> probes() {
        const std::size_t n = body_.size();
        const LCdawg& g = built_.index.graph();
        std::vector<std::string> out;
        if (n == 0) {
            for (int c = 1; c <= 3; ++c) out.push_back(std::string(1, static_cast<char>('a' + c)));
            return out;
        }
        std::vector<EdgeId> in_edge(g.node_count(), kNoEdge);
        for (EdgeId e = 0; e < g.edge_count(); ++e) in_edge[g.edge(e).lo] = e;

        auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
            return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
        };
        auto present = [&] {
            std::uint64_t cap = std::min<std::uint64_t>(n, std::vector<std::uint64_t>{8, 64, n}[pick(0, 2)]);
            std::uint64_t len = pick(1, cap);
            std::uint64_t start = pick(0, n - len);
            return body_.substr(start, len);
        };
        while (out.size() < opt_.patterns) {
            switch (out.size() % 4) {
                case 0:
                    out.push_back(present());
                    break;
                case 1: {
                    std::string p = present();
                    p[pick(0, p.size() - 1)] = static_cast<char>(pick(1, 255));
                    out.push_back(p);
                    break;
                }
                case 2: {
                    std::string p = present();
                    p.push_back(static_cast<char>(pick(1, 255)));
                    out.push_back(p);
                    break;
                }
                default: {
                    if (g.type2_count() == 0) {
                        out.push_back(present());
                        break;
                    }
                    auto t = static_cast<NodeId>(pick(g.type1_count(), g.node_count() - 1));
                    LabelSpan a = built_.spans[in_edge[t]];
                    LabelSpan b = built_.spans[g.first_edge(t)];
                    if (b.pos + b.len > n) b.len = n - b.pos;  // drop the sentinel
                    std::uint64_t k = pick(1, std::min<std::uint64_t>(a.len, 32));
                    std::uint64_t j = b.len == 0 ? 0 : pick(1, std::min<std::uint64_t>(b.len, 32));
                    out.push_back(body_.substr(a.pos + a.len - k, k) + body_.substr(b.pos, j));
                }
            }
        }
        return out;
    }

    // Nodes visited when enumerating the occurrences below the locus of `p`,
    // following skip shortcuts over type-2 nodes.
    std::uint64_t report_steps(const std::string& p) const {
        const LCdawg& g = built_.index.graph();
        auto locus = built_.index.locate(as_symbols(p));
        std::uint64_t steps = 0;
        std::vector<NodeId> stack{g.edge(locus->edge).lo};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++steps;
            if (v == g.sink()) continue;
            if (!g.is_type1(v)) {
                stack.push_back(g.skip(v).target);
                continue;
            }
            for (EdgeId e = g.first_edge(v); e < g.end_edge(v); ++e) stack.push_back(g.edge(e).lo);
        }
        return steps;
    }

    void queries() {
        const Index& idx = built_.index;
        auto patterns = probes();
        std::vector<OccurrenceList> expected;
        expected.reserve(patterns.size());
        bool find_ok = true;
        bool count_ok = true;
        bool range_ok = true;
        std::string why;
        for (const std::string& p : patterns) {
            expected.push_back(oracle::naive_find(text_.body(), as_symbols(p)));
            OccurrenceList got = idx.find(p);
            if (got != expected.back() && find_ok) {
                find_ok = false;
                why = "pattern " + escaped(p) + ": " + std::to_string(got.size()) + " vs " +
                      std::to_string(expected.back().size()) + " hits";
            }
            count_ok = count_ok && idx.count(p) == got.size() && idx.exists(p) == !got.empty();
            if (!got.empty()) {
                report_.observe("ratio.report_steps/occ",
                                static_cast<double>(report_steps(p)) / static_cast<double>(got.size()));
            }
            for (std::uint64_t pos : got) range_ok = range_ok && pos >= 1 && pos + p.size() - 1 <= text_.size();
        }
        report_.record("find.oracle", find_ok, why + tag_);
        report_.record("find.count_consistency", count_ok, tag_);
        report_.record("find.bounds", range_ok, tag_);

        if (!opt_.roundtrip) return;
        bool same = false;
        std::string detail;
        try {
            auto bytes = serialize(idx);
            Index loaded = deserialize(bytes);
            same = loaded == idx;
            for (std::size_t i = 0; i < patterns.size() && same; ++i) same = loaded.find(patterns[i]) == expected[i];
            if (text_.size() >= 1) {
                report_.observe("ratio.file_bytes/(e_tilde*8)",
                                static_cast<double>(bytes.size()) / (8.0 * static_cast<double>(stats_.e_tilde)));
            }
        } catch (const Error& e) {
            detail = e.what();
        }
        report_.record("persistence.roundtrip", same, detail + tag_);
    }

    void extraction() {
        const Index& idx = built_.index;
        const std::uint64_t n = text_.size();
        if (n == 0) {
            bool rejects = false;
            try {
                idx.extract(1, 1);
            } catch (const BoundsError&) {
                rejects = true;
            }
            report_.record("extract.full", rejects, tag_);
            return;
        }
        report_.record("extract.full", idx.extract(1, n) == body_, tag_);
        bool ok = true;
        std::string why;
        std::uniform_int_distribution<std::uint64_t> pos(1, n);
        std::uniform_int_distribution<std::uint64_t> len(0, 64);
        for (std::size_t k = 0; k < opt_.extract_probes && ok; ++k) {
            std::uint64_t i = pos(rng_);
            std::uint64_t m = (k % 97 == 0) ? n : len(rng_);
            ok = idx.extract(i, m) == body_.substr(i - 1, m);
            if (!ok) why = "i=" + std::to_string(i) + " m=" + std::to_string(m);
        }
        report_.record("extract.probes", ok, why + tag_);
    }

    const Text& text_;
    const Options& opt_;
    std::mt19937_64 rng_;
    Report& report_;
    std::string body_;
    std::string tag_;
    BuildResult built_;
    IndexStats stats_;
};

}  // namespace

void check_text(const Text& text, const Options& options, std::uint64_t seed, Report& report) {
    Checker(text, options, seed, report).run();
}

std::string random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
    sigma = std::clamp(sigma, 1u, 255u);
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    std::string s(n, '\0');
    for (char& c : s) {
        unsigned k = pick(rng);
        c = static_cast<char>(sigma <= 26 ? 'a' + k : k + 1);
    }
    return s;
}

std::string fibonacci_word(std::size_t n) {
    std::string a = "a";
    std::string b = "ab";
    while (b.size() < n) {
        std::string next = b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return n <= 1 ? a.substr(0, n) : b.substr(0, n);
}

std::string thue_morse(std::size_t n) {
    std::string s(n, 'a');
    for (std::size_t i = 0; i < n; ++i) {
        if (__builtin_popcountll(i) % 2 == 1) s[i] = 'b';
    }
    return s;
}

std::string periodic(std::size_t n, const std::string& period) {
    std::string s;
    s.reserve(n);
    while (s.size() < n) s += period;
    s.resize(n);
    return s;
}

}  // namespace lcdawg::verify
