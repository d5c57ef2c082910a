#include <doctest.h>

#include <algorithm>
#include <set>

#include "lcdawg/cdawg.hpp"
#include "lcdawg/oracles.hpp"
#include "support.hpp"

using namespace lcdawg;

namespace {

std::set<std::string> edge_labels(const Cdawg& g, const Text& t) {
    std::set<std::string> out;
    for (const CdawgEdge& e : g.edges()) out.insert(label_string(t, e.label));
    return out;
}

std::set<std::string> node_values(const Cdawg& g, const Text& t) {
    std::set<std::string> out;
    for (NodeId v = 0; v < g.node_count(); ++v) out.insert(g.value(v, t));
    return out;
}

}  // namespace

TEST_CASE("single symbol text") {
    Text t = Text::from_string("a");
    Cdawg g = build_cdawg(t);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(edge_labels(g, t) == std::set<std::string>{std::string("a\0", 2), std::string("\0", 1)});
    CHECK(g.out_degree(g.source()) == 2);
    CHECK(g.out_degree(g.sink()) == 0);
}

TEST_CASE("empty text has a single sentinel edge") {
    Text t = Text::from_string("");
    Cdawg g = build_cdawg(t);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(path_count(g)[g.source()] == 1);
}

TEST_CASE("ababaac matches the automaton oracle") {
    Text t = Text::from_string("ababaac");
    Cdawg g = build_cdawg(t);
    auto oracle = oracle::brute_minimal_automaton(t);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 9);
    CHECK(g.node_count() == oracle.node_count);
    CHECK(g.edge_count() == oracle.edge_count);
    CHECK(node_values(g, t) == oracle.values);
}

TEST_CASE("abcdbcda edge count equals right extensions of maximal repeats") {
    Text t = Text::from_string("abcdbcda");
    Cdawg g = build_cdawg(t);
    auto with_sentinel = oracle::brute_maximal_repeats(t, true, 300);
    auto plain = oracle::brute_maximal_repeats(t, false, 300);
    CHECK(g.edge_count() == 9);
    CHECK(g.edge_count() == with_sentinel.right_extensions);
    CHECK(plain.right_extensions == 7);
    CHECK(node_values(g, t) == std::set<std::string>{"", "a", "bcd", std::string("abcdbcda\0", 9)});
}

TEST_CASE("path counts") {
    Text t = Text::from_string("ababaac");
    Cdawg g = build_cdawg(t);
    auto counts = path_count(g);
    CHECK(counts[g.sink()] == 1);
    CHECK(counts[g.source()] == t.size() + 1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == g.source() || v == g.sink()) continue;
        std::string value = g.value(v, t);
        CHECK(counts[v] == oracle::naive_find(t.body(), as_symbols(value)).size());
        if (value == "a") CHECK(counts[v] == 4);
        if (value == "aba") CHECK(counts[v] == 2);
    }
}

TEST_CASE("structure of random texts") {
    for (const std::string& s : testing::random_corpus(300, 120, 11)) {
        Text t = Text::from_string(s);
        Cdawg g = build_cdawg(t);
        auto oracle = oracle::brute_minimal_automaton(t);
        REQUIRE(g.node_count() == oracle.node_count);
        REQUIRE(g.edge_count() == oracle.edge_count);
        REQUIRE(node_values(g, t) == oracle.values);

        auto order = g.topological_order();
        std::vector<std::size_t> rank(g.node_count());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            for (EdgeId e = g.first_edge(v); e + 1 < g.end_edge(v); ++e) {
                CHECK(g.edge(e).first < g.edge(e + 1).first);
            }
            for (EdgeId e = g.first_edge(v); e < g.end_edge(v); ++e) {
                const CdawgEdge& ed = g.edge(e);
                CHECK(rank[ed.hi] < rank[ed.lo]);
                CHECK(g.depth(ed.lo) >= g.depth(v) + ed.label.len);
                CHECK(g.find_child(v, ed.first) == e);
            }
            if (v != g.source() && v != g.sink()) {
                CHECK(g.out_degree(v) >= 2);
                CHECK(g.depth(g.slink(v)) < g.depth(v));
            }
        }
    }
}
