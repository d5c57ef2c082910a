#include <doctest.h>

#include "lcdawg/errors.hpp"
#include "lcdawg/text.hpp"

using namespace lcdawg;

TEST_CASE("text appends the sentinel") {
    Text t = Text::from_string("abc");
    CHECK(t.size() == 3);
    CHECK(t.terminated().size() == 4);
    CHECK(t.terminated()[3] == kSentinel);
    CHECK(t.body_string() == "abc");
    CHECK(t.sigma() == 3);
}

TEST_CASE("empty text") {
    Text t = Text::from_string("");
    CHECK(t.size() == 0);
    CHECK(t.terminated().size() == 1);
    CHECK(t.sigma() == 0);
}

TEST_CASE("zero byte in the text is rejected") {
    std::string s("ab\0c", 4);
    CHECK_THROWS_AS(Text::from_string(s), InputError);
}

TEST_CASE("reversal") {
    CHECK(Text::from_string("abcd").reversed().body_string() == "dcba");
    CHECK(Text::from_string("\xff\x01").reversed().body_string() == "\x01\xff");
}
