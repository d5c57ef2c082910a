#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "lcdawg/errors.hpp"
#include "lcdawg/persistence.hpp"
#include "support.hpp"

using namespace lcdawg;
using Bytes = std::vector<std::uint8_t>;

namespace {

constexpr std::size_t kHeader = 60;
constexpr std::size_t kNode = 25;
constexpr std::size_t kEdge = 21;
constexpr std::size_t kRule = 9;

std::uint64_t read_le(const Bytes& b, std::size_t at, int width) {
    std::uint64_t v = 0;
    for (int i = width - 1; i >= 0; --i) v = (v << 8) | b[at + i];
    return v;
}

void write_le(Bytes& b, std::size_t at, std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) b[at + i] = static_cast<std::uint8_t>(v >> (8 * i));
}

FormatErrc rejection(const Bytes& bytes) {
    try {
        deserialize(bytes);
    } catch (const FormatError& e) {
        return e.code();
    }
    FAIL("file was accepted");
    return FormatErrc::bad_magic;
}

// Re-encodes a file written with 4-byte ids using 8-byte ids.
Bytes widen(const Bytes& in) {
    Bytes out;
    std::size_t at = 0;
    auto copy = [&](std::size_t k) {
        out.insert(out.end(), in.begin() + at, in.begin() + at + k);
        at += k;
    };
    auto id = [&] {
        std::uint64_t v = read_le(in, at, 4);
        if (v == 0xffffffffu) v = ~std::uint64_t{0};
        out.resize(out.size() + 8);
        write_le(out, out.size() - 8, v, 8);
        at += 4;
    };
    std::uint64_t nodes = read_le(in, 24, 8), edges = read_le(in, 40, 8), rules = read_le(in, 48, 8);
    copy(8);
    out.resize(out.size() + 4);
    write_le(out, 8, 8, 4);
    at += 4;
    copy(44);
    id();
    for (std::uint64_t v = 0; v < nodes; ++v) {
        copy(1), id(), id(), copy(16);
    }
    for (std::uint64_t e = 0; e < edges; ++e) {
        id(), id(), copy(9), id();
    }
    for (std::uint64_t x = 0; x < rules; ++x) {
        copy(1), id(), id();
    }
    return out;
}

}  // namespace

TEST_CASE("round trip preserves answers") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    Bytes bytes = serialize(idx);
    Index loaded = deserialize(bytes);
    CHECK(loaded == idx);
    CHECK(loaded.find("bcd") == OccurrenceList{2, 5});
    CHECK(loaded.extract(1, 8) == "abcdbcda");
}

TEST_CASE("layout sizes") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    Bytes bytes = serialize(idx);
    const auto& g = idx.graph();
    CHECK(std::memcmp(bytes.data(), "LCDW", 4) == 0);
    CHECK(read_le(bytes, 4, 4) == kFormatVersion);
    CHECK(read_le(bytes, 8, 4) == 4);
    CHECK(read_le(bytes, 16, 8) == 8);
    CHECK(bytes.size() ==
          kHeader + kNode * g.node_count() + kEdge * g.edge_count() + kRule * idx.slp().size());
}

TEST_CASE("golden file") {
    std::ifstream in(std::filesystem::path(LCDAWG_TEST_DATA) / "abcdbcda.lcdw", std::ios::binary);
    REQUIRE(in.good());
    Bytes golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Index idx = Index::build(Text::from_string("abcdbcda"));
    CHECK(serialize(idx) == golden);
    Index loaded = deserialize(golden);
    CHECK(loaded.find("bcd") == OccurrenceList{2, 5});
    CHECK(loaded.count("a") == 2);
}

TEST_CASE("eight byte ids are accepted") {
    Index idx = Index::build(Text::from_string("mississippi"));
    Bytes wide = widen(serialize(idx));
    Index loaded = deserialize(wide);
    CHECK(loaded == idx);
}

TEST_CASE("corrupt files are rejected") {
    Index idx = Index::build(Text::from_string("abcdbcda"));
    const Bytes good = serialize(idx);

    Bytes bad = good;
    bad[0] = 'X';
    CHECK(rejection(bad) == FormatErrc::bad_magic);

    bad = good;
    bad[4] = 9;
    CHECK(rejection(bad) == FormatErrc::unsupported_version);

    bad = good;
    bad[8] = 3;
    CHECK(rejection(bad) == FormatErrc::unsupported_version);

    bad = good;
    bad.resize(good.size() - 1);
    CHECK(rejection(bad) == FormatErrc::truncated);
    CHECK(rejection(Bytes(good.begin(), good.begin() + 10)) == FormatErrc::truncated);
    CHECK(rejection(Bytes{}) == FormatErrc::truncated);

    bad = good;
    bad.push_back(0);
    CHECK(rejection(bad) == FormatErrc::trailing_bytes);

    bad = good;
    write_le(bad, kHeader + kNode * idx.graph().node_count(), 1000, 4);
    CHECK(rejection(bad) == FormatErrc::id_out_of_range);

    bad = good;
    write_le(bad, 24, std::uint64_t{1} << 40, 8);
    CHECK(rejection(bad) == FormatErrc::truncated);

    bad = good;
    std::size_t count_at = kHeader + 24;  // path count of the sink
    write_le(bad, count_at + kNode, read_le(bad, count_at + kNode, 8) + 1, 8);
    CHECK(rejection(bad) == FormatErrc::invariant_violation);
}

TEST_CASE("every single-byte header corruption is rejected") {
    Index idx = Index::build(Text::from_string("abracadabra"));
    const Bytes good = serialize(idx);
    for (std::size_t at = 0; at < kHeader; ++at) {
        for (std::uint8_t flip : {0x01, 0x5a, 0x80}) {
            Bytes bad = good;
            bad[at] ^= flip;
            CHECK_THROWS_AS(deserialize(bad), FormatError);
        }
    }
}

TEST_CASE("streams and files") {
    Index idx = Index::build(Text::from_string("abab"));
    std::stringstream buf;
    CHECK(serialize(idx, buf) == serialize(idx).size());
    CHECK(deserialize(buf) == idx);

    auto path = std::filesystem::temp_directory_path() / "lcdawg_test_index.lcdw";
    save_index(idx, path);
    CHECK(load_index(path) == idx);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_index(path), IoError);
}
