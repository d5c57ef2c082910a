#include <doctest.h>

#include "lcdawg/errors.hpp"
#include "lcdawg/oracles.hpp"
#include "support.hpp"

using namespace lcdawg;
using List = OccurrenceList;

TEST_CASE("find on small texts") {
    Index a = Index::build(Text::from_string("ababaac"));
    CHECK(a.find("aba") == List{1, 3});
    CHECK(a.find("x") == List{});
    CHECK(a.find("a") == List{1, 3, 5, 6});
    CHECK(a.find("ababaac") == List{1});
    CHECK(a.find("ababaacx") == List{});

    Index b = Index::build(Text::from_string("abcdbcda"));
    CHECK(b.find("bcd") == List{2, 5});
    CHECK(b.find("da") == List{7});
}

TEST_CASE("count and exists") {
    Index idx = Index::build(Text::from_string("ababaac"));
    CHECK(idx.count("a") == 4);
    CHECK(idx.count("zz") == 0);
    CHECK(idx.count("ababaac") == 1);
    CHECK(idx.exists("ab"));
    CHECK_FALSE(idx.exists("ca"));
}

TEST_CASE("locus of a pattern") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    auto locus = idx.locate(as_symbols("bc"));
    REQUIRE(locus.has_value());
    CHECK(locus->matched == 2);
    CHECK_FALSE(idx.locate(as_symbols("bb")).has_value());
}

TEST_CASE("invalid patterns") {
    Index idx = Index::build(Text::from_string("ababaac"));
    CHECK_THROWS_AS(idx.find(""), InputError);
    CHECK_THROWS_AS(idx.exists(""), InputError);
    CHECK_THROWS_AS(idx.count(std::string("a\0", 2)), InputError);
}

TEST_CASE("extract") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    CHECK(idx.extract(3, 2) == "cd");
    CHECK(idx.extract(1, 8) == "abcdbcda");
    CHECK(idx.extract(7, 100) == "da");
    CHECK(idx.extract(8, 0) == "");
    CHECK_THROWS_AS(idx.extract(0, 1), BoundsError);
    CHECK_THROWS_AS(idx.extract(9, 1), BoundsError);
}

TEST_CASE("empty text index") {
    Index idx = Index::build(Text::from_string(""));
    CHECK(idx.size() == 0);
    CHECK(idx.find("a") == List{});
    CHECK_THROWS_AS(idx.extract(1, 1), BoundsError);
}

TEST_CASE("find agrees with the naive scan") {
    std::mt19937_64 rng(23);
    for (const std::string& s : testing::random_corpus(300, 300, 29)) {
        Text t = Text::from_string(s);
        Index idx = Index::build(t);
        for (int k = 0; k < 200; ++k) {
            std::size_t len = 1 + rng() % std::min<std::size_t>(s.size(), 12);
            std::string p = s.substr(rng() % (s.size() - len + 1), len);
            if (k % 3 == 0) p[rng() % p.size()] = static_cast<char>(1 + rng() % 255);
            auto expected = oracle::naive_find(t.body(), as_symbols(p));
            REQUIRE(idx.find(p) == expected);
            CHECK(idx.count(p) == expected.size());
        }
    }
}

TEST_CASE("build check catches nothing on valid input") {
    for (const char* s : {"mississippi", "abcabcabcabc", "\xff\xfe\xff\xfe"}) {
        CHECK_NOTHROW(Index::build(Text::from_string(s), {.check_fingerprints = true}));
    }
}
