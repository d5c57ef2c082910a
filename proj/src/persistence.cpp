#include "lcdawg/persistence.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include "lcdawg/errors.hpp"

namespace lcdawg {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'L', 'C', 'D', 'W'};
constexpr std::uint32_t kIdWidth = 4;
constexpr std::size_t kHeaderFixed = 4 + 4 + 4 + 4 + 8 * 5;

class Writer {
public:
    explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}

    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }
    void id(std::uint32_t v) { le(v == std::numeric_limits<std::uint32_t>::max() ? ~std::uint64_t{0} : v, kIdWidth); }

private:
    void le(std::uint64_t v, unsigned width) {
        for (unsigned i = 0; i < width; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    std::vector<std::uint8_t>& out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    std::size_t remaining() const { return in_.size() - pos_; }

    std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }

    // Absent ids decode to the all-ones 32-bit value. Anything else must be
    // below `bound`.
    std::uint32_t id(std::uint64_t bound, const char* what) {
        std::uint64_t v = le(width_);
        std::uint64_t none = width_ == 8 ? ~std::uint64_t{0} : 0xffffffffULL;
        if (v == none) return std::numeric_limits<std::uint32_t>::max();
        if (v >= bound) {
            throw FormatError(FormatErrc::id_out_of_range,
                              std::string(what) + " id " + std::to_string(v) + " >= " + std::to_string(bound));
        }
        return static_cast<std::uint32_t>(v);
    }

    void set_id_width(unsigned w) { width_ = w; }
    unsigned id_width() const { return width_; }

private:
    std::uint64_t le(unsigned width) {
        if (remaining() < width) throw FormatError(FormatErrc::truncated, "unexpected end of data");
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
        pos_ += width;
        return v;
    }

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    unsigned width_ = kIdWidth;
};

constexpr std::uint32_t kNone32 = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<std::uint8_t> serialize(const Index& index) {
    const LCdawg& g = index.graph();
    const Slp& slp = index.slp();
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderFixed + kIdWidth + g.node_count() * (1 + 2 * kIdWidth + 16) +
                g.edge_count() * (1 + 3 * kIdWidth + 8) + slp.size() * (1 + 2 * kIdWidth));
    Writer w(out);
    for (std::uint8_t b : kMagic) w.u8(b);
    w.u32(kFormatVersion);
    w.u32(kIdWidth);
    w.u32(index.sigma());
    w.u64(index.size());
    w.u64(g.node_count());
    w.u64(g.type1_count());
    w.u64(g.edge_count());
    w.u64(slp.size());
    w.id(slp.root());

    for (NodeId v = 0; v < g.node_count(); ++v) {
        w.u8(static_cast<std::uint8_t>(g.kind(v)));
        w.id(g.slink(v));
        w.id(g.skip(v).target);
        w.u64(g.skip(v).len);
        w.u64(index.path_counts()[v]);
    }
    for (const Edge& e : g.edges()) {
        w.id(e.hi);
        w.id(e.lo);
        w.u8(e.first);
        w.u64(e.slen);
        w.id(e.var);
    }
    for (const Production& p : slp.rules()) {
        w.u8(p.pair ? 1 : 0);
        w.id(p.pair ? p.left : p.symbol);
        w.id(p.pair ? p.right : kNone32);
    }
    return out;
}

std::size_t serialize(const Index& index, std::ostream& out) {
    auto bytes = serialize(index);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed to write index");
    return bytes.size();
}

Index deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMagic.size()) throw FormatError(FormatErrc::truncated, "missing magic");
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw FormatError(FormatErrc::bad_magic, "not an LCDW index file");
    }
    Reader r(bytes.subspan(kMagic.size()));
    std::uint32_t version = r.u32();
    if (version != kFormatVersion) {
        throw FormatError(FormatErrc::unsupported_version, "version " + std::to_string(version));
    }
    std::uint32_t id_width = r.u32();
    if (id_width != 4 && id_width != 8) {
        throw FormatError(FormatErrc::unsupported_version, "id width " + std::to_string(id_width));
    }
    r.set_id_width(id_width);
    std::uint32_t sigma = r.u32();
    std::uint64_t n = r.u64();
    std::uint64_t nodes = r.u64();
    std::uint64_t type1 = r.u64();
    std::uint64_t edges = r.u64();
    std::uint64_t rules = r.u64();

    // Bound the counts by the bytes actually present before allocating.
    const std::uint64_t node_rec = 1 + 2 * id_width + 16;
    const std::uint64_t edge_rec = 1 + 3 * id_width + 8;
    const std::uint64_t rule_rec = 1 + 2 * id_width;
    const std::uint64_t avail = r.remaining();
    if (nodes > avail / node_rec || edges > avail / edge_rec || rules > avail / rule_rec ||
        nodes >= kNone32 || edges >= kNone32 || rules >= kNone32) {
        throw FormatError(FormatErrc::truncated, "table counts exceed the file size");
    }
    const std::uint64_t need = id_width + nodes * node_rec + edges * edge_rec + rules * rule_rec;
    if (avail < need) throw FormatError(FormatErrc::truncated, "tables shorter than declared");
    if (avail > need) throw FormatError(FormatErrc::trailing_bytes, std::to_string(avail - need) + " extra bytes");
    if (type1 > nodes) throw FormatError(FormatErrc::invariant_violation, "type-1 count exceeds node count");

    VarId root = r.id(rules, "root");
    if (root == kNoVar) throw FormatError(FormatErrc::invariant_violation, "missing root variable");

    std::vector<NodeKind> kinds(nodes);
    std::vector<NodeId> slinks(nodes);
    std::vector<Skip> skips(nodes);
    std::vector<std::uint64_t> counts(nodes);
    for (std::uint64_t v = 0; v < nodes; ++v) {
        std::uint8_t k = r.u8();
        if (k != static_cast<std::uint8_t>(NodeKind::type1) && k != static_cast<std::uint8_t>(NodeKind::type2)) {
            throw FormatError(FormatErrc::invariant_violation, "node kind " + std::to_string(k));
        }
        kinds[v] = static_cast<NodeKind>(k);
        slinks[v] = r.id(nodes, "slink");
        skips[v].target = r.id(nodes, "skip target");
        skips[v].len = r.u64();
        counts[v] = r.u64();
        if ((kinds[v] == NodeKind::type1) != (v < type1)) {
            throw FormatError(FormatErrc::invariant_violation, "node kinds disagree with type-1 count");
        }
        if (kinds[v] == NodeKind::type1 && (skips[v].target != kNoNode || skips[v].len != 0)) {
            throw FormatError(FormatErrc::invariant_violation, "type-1 node with a skip shortcut");
        }
    }

    std::vector<Edge> edge_table(edges);
    for (Edge& e : edge_table) {
        e.hi = r.id(nodes, "edge hi");
        e.lo = r.id(nodes, "edge lo");
        e.first = r.u8();
        e.slen = r.u64();
        e.var = r.id(rules, "edge variable");
        if (e.hi == kNoNode || e.lo == kNoNode || e.var == kNoVar) {
            throw FormatError(FormatErrc::invariant_violation, "edge with an absent id");
        }
    }

    std::vector<Production> productions(rules);
    for (Production& p : productions) {
        std::uint8_t tag = r.u8();
        if (tag == 0) {
            std::uint32_t sym = r.id(256, "terminal symbol");
            std::uint32_t none = r.id(0, "terminal padding");
            if (sym == kNone32 || none != kNone32) {
                throw FormatError(FormatErrc::invariant_violation, "malformed terminal rule");
            }
            p = Production::terminal(static_cast<Symbol>(sym));
        } else if (tag == 1) {
            VarId left = r.id(rules, "rule left");
            VarId right = r.id(rules, "rule right");
            if (left == kNoVar || right == kNoVar) {
                throw FormatError(FormatErrc::invariant_violation, "pair rule with an absent id");
            }
            p = Production::binary(left, right);
        } else {
            throw FormatError(FormatErrc::invariant_violation, "rule tag " + std::to_string(tag));
        }
    }

    try {
        std::vector<EdgeId> order;
        LCdawg graph(std::move(kinds), std::move(slinks), std::move(skips), std::move(edge_table), &order);
        for (EdgeId e = 0; e < order.size(); ++e) {
            if (order[e] != e) throw ConsistencyError("edges not grouped by node and sorted");
        }
        Slp slp(std::move(productions), root);
        return Index(n, sigma, std::move(graph), std::move(slp), std::move(counts));
    } catch (const ConsistencyError& err) {
        throw FormatError(FormatErrc::invariant_violation, err.what());
    }
}

Index deserialize(std::istream& in) {
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed to read index");
    return deserialize(std::span<const std::uint8_t>(bytes));
}

void save_index(const Index& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    serialize(index, out);
    out.close();
    if (!out) throw IoError("failed to write " + path.string());
}

Index load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return deserialize(in);
}

}  // namespace lcdawg
