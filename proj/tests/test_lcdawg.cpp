#include <doctest.h>

#include "lcdawg/errors.hpp"
#include "lcdawg/lcdawg.hpp"
#include "lcdawg/oracles.hpp"
#include "support.hpp"

using namespace lcdawg;

namespace {

// Spells `s` from `v` comparing text-derived labels symbol by symbol; returns
// the edges crossed, or nothing if the walk fails or stops inside an edge.
std::optional<std::vector<EdgeId>> spell(const BuildResult& b, const Text& t, NodeId v, const std::string& s) {
    const LCdawg& g = b.index.graph();
    std::vector<EdgeId> path;
    std::size_t i = 0;
    while (i < s.size()) {
        std::optional<EdgeId> hit;
        for (EdgeId e = g.first_edge(v); e < g.end_edge(v); ++e) {
            if (static_cast<char>(g.edge(e).first) == s[i]) hit = e;
        }
        if (!hit) return std::nullopt;
        std::string lab = testing::label(b, t, *hit);
        if (s.compare(i, lab.size(), lab) != 0) return std::nullopt;
        path.push_back(*hit);
        i += lab.size();
        v = g.edge(*hit).lo;
    }
    return path;
}

std::vector<EdgeId> naive_esuf(const BuildResult& b, const Text& t, EdgeId e) {
    const LCdawg& g = b.index.graph();
    auto path = spell(b, t, g.slink(g.edge(e).hi), testing::label(b, t, e));
    REQUIRE(path.has_value());
    return *path;
}

// Follows suffix links until the edge suffix path has at least two edges.
std::vector<EdgeId> naive_jump(const BuildResult& b, const Text& t, EdgeId e) {
    while (true) {
        auto p = naive_esuf(b, t, e);
        if (p.size() >= 2) return p;
        e = p.front();
    }
}

}  // namespace

TEST_CASE("abcdbcda gains type-2 nodes within the left-extension bound") {
    Text t = Text::from_string("abcdbcda");
    BuildResult b = build_pipeline(t);
    const LCdawg& g = b.index.graph();
    auto left = oracle::brute_maximal_repeats(t, false, 300).left_extensions;
    CHECK(left == 7);
    CHECK(g.type1_count() == 4);
    CHECK(g.type2_count() >= 1);
    CHECK(g.type2_count() <= left);

    bool found = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (testing::label(b, t, e) != std::string("bcda\0", 5)) continue;
        auto p = edge_suffix_link(g, e);
        CHECK(p.edges == naive_esuf(b, t, e));
        if (p.edges.size() >= 2) found = true;
    }
    CHECK(found);
}

TEST_CASE("ababaac type-2 count") {
    Text t = Text::from_string("ababaac");
    BuildResult b = build_pipeline(t);
    CHECK(b.index.graph().type2_count() <= 6);
}

TEST_CASE("atomic edges and type-2 shape") {
    for (const std::string& s : testing::random_corpus(200, 200, 5)) {
        Text t = Text::from_string(s);
        BuildResult b = build_pipeline(t);
        const LCdawg& g = b.index.graph();
        CHECK_NOTHROW(g.validate());
        for (EdgeId e = g.first_edge(g.source()); e < g.end_edge(g.source()); ++e) CHECK(g.edge(e).slen == 1);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.is_type1(v)) continue;
            CHECK(g.out_degree(v) == 1);
            CHECK(g.is_type1(g.slink(v)));
            const Skip& skip = g.skip(v);
            CHECK(g.is_type1(skip.target));
            CHECK(chain_from(g, g.first_edge(v)).slen == skip.len);
        }
    }
}

TEST_CASE("edge suffix paths against the naive walk") {
    for (const std::string& s : testing::random_corpus(1000, 500, 17)) {
        Text t = Text::from_string(s);
        BuildResult b = build_pipeline(t);
        const LCdawg& g = b.index.graph();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).slen < 2) continue;
            EdgePath p = edge_suffix_link(g, e);
            REQUIRE(p.edges == naive_esuf(b, t, e));
            CHECK(p.slen == g.edge(e).slen);
            CHECK(g.is_type1(g.edge(p.edges.front()).hi));
            CHECK(g.is_type1(g.edge(p.edges.back()).lo));
            for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) CHECK_FALSE(g.is_type1(g.edge(p.edges[i]).lo));

            EdgePath j = jump(g, b.jumps, e);
            REQUIRE(j.edges == naive_jump(b, t, e));
            CHECK(j.edges.size() >= 2);
            CHECK(testing::spelled(b, t, j.edges) == testing::label(b, t, e));
        }
    }
}

TEST_CASE("longest edge of a^8 becomes a chain of atomic edges") {
    Text t = Text::from_string("aaaaaaaa");
    BuildResult b = build_pipeline(t);
    const LCdawg& g = b.index.graph();
    EdgeId longest = 0;
    for (EdgeId e = 0; e < b.cdawg.edge_count(); ++e) {
        if (b.cdawg.edge(e).label.len > b.cdawg.edge(longest).label.len) longest = e;
    }
    CHECK(label_string(t, b.cdawg.edge(longest).label) == std::string("a\0", 2));
    std::vector<EdgeId> pieces;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(g.edge(e).slen == 1);
        if (b.origin[e] == longest) pieces.push_back(e);
    }
    REQUIRE(pieces.size() == 2);
    CHECK(g.edge(pieces[0]).lo == g.edge(pieces[1]).hi);
    CHECK_FALSE(g.is_type1(g.edge(pieces[0]).lo));
    CHECK(testing::spelled(b, t, pieces) == std::string("a\0", 2));
    CHECK(g.type2_count() == 1);
}

TEST_CASE("jumps on a Fibonacci word") {
    Text t = Text::from_string(verify::fibonacci_word(377));
    BuildResult b = build_pipeline(t);
    const LCdawg& g = b.index.graph();
    std::size_t long_edges = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).slen < 2) continue;
        ++long_edges;
        EdgePath j = jump(g, b.jumps, e);
        CHECK(j.edges == naive_jump(b, t, e));
        for (EdgeId f : j.edges) CHECK(g.edge(f).slen < g.edge(e).slen);
    }
    CHECK(long_edges > 0);
}

TEST_CASE("jump table entries") {
    Text t = Text::from_string("abracadabra");
    BuildResult b = build_pipeline(t);
    const LCdawg& g = b.index.graph();
    REQUIRE(b.jumps.size() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).slen == 1) {
            CHECK(b.jumps[e] == kNoEdge);
        } else {
            CHECK(b.jumps[e] != kNoEdge);
            CHECK(g.edge(b.jumps[e]).slen < g.edge(e).slen);
        }
    }
}

TEST_CASE("validate rejects a broken graph") {
    Text t = Text::from_string("abcdbcda");
    BuildResult b = build_pipeline(t);
    const LCdawg& g = b.index.graph();
    std::vector<NodeKind> kinds;
    std::vector<NodeId> slinks;
    std::vector<Skip> skips;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        kinds.push_back(g.kind(v));
        slinks.push_back(g.slink(v));
        skips.push_back(g.skip(v));
    }
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back(Edge{g.sink(), g.source(), 'z', 1, 0});
    LCdawg broken(kinds, slinks, skips, edges, nullptr);
    CHECK_THROWS_AS(broken.validate(), ConsistencyError);
}
