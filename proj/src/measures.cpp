#include "lcdawg/measures.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "lcdawg/oracles.hpp"

namespace lcdawg {
namespace {

void fill_optional(IndexStats& stats, const Text& text, const MeasureOptions& options) {
    if (options.lz) stats.z = oracle::lz77_parse(text.body()).size();
    if (options.bwt_runs) stats.r = oracle::bwt_runs(text.terminated());
}

std::vector<std::pair<const char*, std::string>> fields(const IndexStats& s) {
    std::vector<std::pair<const char*, std::string>> out{
        {"n", std::to_string(s.n)},
        {"sigma", std::to_string(s.sigma)},
        {"mu", std::to_string(s.mu)},
        {"e_r", std::to_string(s.e_r)},
        {"e_l", std::to_string(s.e_l)},
        {"e_tilde", std::to_string(s.e_tilde)},
        {"type1_count", std::to_string(s.type1_count)},
        {"type2_count", std::to_string(s.type2_count)},
        {"edge_count", std::to_string(s.edge_count)},
        {"production_count", std::to_string(s.production_count)},
        {"grammar_height", std::to_string(s.grammar_height)},
    };
    if (s.z) out.emplace_back("z", std::to_string(*s.z));
    if (s.r) out.emplace_back("r", std::to_string(*s.r));
    return out;
}

}  // namespace

std::uint64_t right_extensions(const Cdawg& cdawg) {
    return static_cast<std::uint64_t>(std::count_if(
        cdawg.edges().begin(), cdawg.edges().end(), [](const CdawgEdge& e) { return e.first != kSentinel; }));
}

IndexStats measure_text(const Text& text, const MeasureOptions& options) {
    return measure_build(build_pipeline(text), text, options);
}

IndexStats measure_build(const BuildResult& built, const Text& text, const MeasureOptions& options) {
    const Index& index = built.index;
    IndexStats s;
    s.n = text.size();
    s.sigma = text.sigma();
    s.mu = built.cdawg.node_count() - 2;
    s.e_r = right_extensions(built.cdawg);
    s.e_l = right_extensions(build_cdawg(text.reversed()));
    s.e_tilde = s.e_r + s.e_l;
    s.type1_count = index.graph().type1_count();
    s.type2_count = index.graph().type2_count();
    s.edge_count = index.graph().edge_count();
    s.production_count = index.slp().size();
    s.grammar_height = index.slp().height();
    fill_optional(s, text, options);
    return s;
}

IndexStats measure_index(const Index& index, const MeasureOptions& options) {
    const LCdawg& g = index.graph();
    IndexStats s;
    s.n = index.size();
    s.sigma = index.sigma();
    s.mu = g.type1_count() - 2;
    // Collapsing type-2 chains leaves exactly the CDAWG edges, one per edge
    // leaving a type-1 node.
    for (const Edge& e : g.edges()) {
        if (g.is_type1(e.hi) && e.first != kSentinel) ++s.e_r;
    }
    std::string body = s.n == 0 ? std::string() : index.extract(1, s.n);
    Text text = Text::from_string(body);
    s.e_l = right_extensions(build_cdawg(text.reversed()));
    s.e_tilde = s.e_r + s.e_l;
    s.type1_count = g.type1_count();
    s.type2_count = g.type2_count();
    s.edge_count = g.edge_count();
    s.production_count = index.slp().size();
    s.grammar_height = index.slp().height();
    fill_optional(s, text, options);
    return s;
}

std::string format_stats_line(const IndexStats& stats) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : fields(stats)) {
        if (!first) out << ' ';
        out << key << '=' << value;
        first = false;
    }
    return out.str();
}

std::string format_stats_document(const IndexStats& stats) {
    std::ostringstream out;
    for (const auto& [key, value] : fields(stats)) out << key << '=' << value << '\n';
    return out.str();
}

}  // namespace lcdawg
