#include <doctest.h>

#include <sstream>

#include "lcdawg/errors.hpp"
#include "lcdawg/measures.hpp"
#include "lcdawg/slp.hpp"
#include "support.hpp"

using namespace lcdawg;

TEST_CASE("terminal and pair rules") {
    Slp slp({Production::terminal('a'), Production::terminal('b'), Production::binary(0, 1),
             Production::binary(2, 2)},
            3);
    CHECK(slp.size() == 4);
    CHECK(slp.length(3) == 4);
    CHECK(slp.first_char(3) == 'a');
    CHECK(slp.height(0) == 1);
    CHECK(slp.height() == 3);
    CHECK(slp.expand_prefix(3, 10) == "abab");
    CHECK(slp.expand_prefix(3, 3) == "aba");
    CHECK(slp.access(3, 2, 2) == "ba");
    CHECK(slp.access(3, 4, 9) == "b");
    CHECK_THROWS_AS(slp.access(3, 0, 1), BoundsError);
    CHECK_THROWS_AS(slp.access(3, 5, 1), BoundsError);
    CHECK_THROWS_AS(slp.expand_prefix(9, 1), BoundsError);
}

TEST_CASE("forward references are rejected") {
    CHECK_THROWS_AS(Slp({Production::binary(1, 1), Production::terminal('a')}, 0), ConsistencyError);
    CHECK_THROWS_AS(Slp({Production::terminal('a')}, 3), ConsistencyError);
}

TEST_CASE("cursor streams a suffix") {
    Slp slp({Production::terminal('x'), Production::terminal('y'), Production::binary(0, 1),
             Production::binary(2, 0)},
            3);
    Slp::Cursor cur(slp, 3, 2);
    CHECK(cur.remaining() == 2);
    CHECK(cur.next() == 'y');
    CHECK(cur.next() == 'x');
    CHECK(cur.done());
    CHECK_THROWS_AS(cur.next(), BoundsError);
}

TEST_CASE("edge variables derive edge labels") {
    for (const char* s : {"ababaac", "abcdbcda", "aaaaaaaa", "abracadabra", "a", ""}) {
        Text t = Text::from_string(s);
        BuildResult b = build_pipeline(t, {.check_fingerprints = false});
        const Index& idx = b.index;
        const Slp& slp = idx.slp();
        for (EdgeId e = 0; e < idx.graph().edge_count(); ++e) {
            const Edge& ed = idx.graph().edge(e);
            CHECK(slp.expand_prefix(ed.var, ed.slen) == testing::label(b, t, e));
            CHECK(static_cast<unsigned char>(slp.expand_prefix(ed.var, 1)[0]) == ed.first);
            if (ed.slen == 1) {
                CHECK_FALSE(slp.rule(ed.var).pair);
                CHECK(slp.rule(ed.var).symbol == ed.first);
            }
        }
        std::string full(t.body_string());
        full.push_back('\0');
        CHECK(slp.expand_prefix(slp.root(), t.size() + 1) == full);
        if (t.size() > 0) CHECK(slp.access(slp.root(), 1, t.size()) == t.body_string());
    }
}

TEST_CASE("abcdbcda direct read") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    CHECK(idx.slp().access(idx.slp().root(), 3, 2) == "cd");
}

TEST_CASE("production count on Fibonacci words") {
    for (std::size_t n : {10u, 100u, 1000u, 4181u, 10000u}) {
        Text t = Text::from_string(verify::fibonacci_word(n));
        BuildResult b = build_pipeline(t);
        IndexStats st = measure_build(b, t);
        CHECK(st.production_count <= 8 * st.e_tilde);
        CHECK(st.production_count == b.index.slp().size());
    }
}

TEST_CASE("random access on a repetitive text") {
    std::string s = verify::fibonacci_word(10000);
    Index idx = Index::build(Text::from_string(s));
    std::string terminated = s + '\0';
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10000; ++k) {
        std::uint64_t i = 1 + rng() % s.size();
        std::uint64_t m = rng() % 80;
        REQUIRE(idx.slp().access(idx.slp().root(), i, m) == terminated.substr(i - 1, m));
        REQUIRE(idx.extract(i, m) == s.substr(i - 1, m));
    }
}

TEST_CASE("grammar export") {
    Index idx = Index::build(Text::from_string("ab"));
    std::ostringstream out;
    write_grammar(idx.slp(), out);
    std::string text = out.str();
    CHECK(text.rfind("root X" + std::to_string(idx.slp().root()) + "\n", 0) == 0);
    CHECK(text.find("-> 'a'") != std::string::npos);
    CHECK(text.find("-> 0x00") != std::string::npos);
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == idx.slp().size() + 1);
}
