#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcdawg/lcdawg.hpp"
#include "lcdawg/text.hpp"

namespace lcdawg {

// X -> a  or  X -> Y Z.
struct Production {
    bool pair = false;
    Symbol symbol = 0;
    VarId left = kNoVar;
    VarId right = kNoVar;

    static Production terminal(Symbol c) { return {false, c, kNoVar, kNoVar}; }
    static Production binary(VarId l, VarId r) { return {true, 0, l, r}; }

    friend bool operator==(const Production&, const Production&) = default;
};

// Straight-line program with variables numbered in topological order: the
// right-hand side of every pair rule refers to strictly smaller ids.
class Slp {
public:
    Slp() = default;

    // Validates the ordering and computes per-variable metadata. Throws
    // ConsistencyError on forward references or an out-of-range root.
    Slp(std::vector<Production> rules, VarId root);

    std::size_t size() const noexcept { return rules_.size(); }
    VarId root() const noexcept { return root_; }
    const Production& rule(VarId x) const { return rules_.at(x); }
    std::span<const Production> rules() const noexcept { return rules_; }

    // |F(X)|.
    std::uint64_t length(VarId x) const { return length_.at(x); }
    Symbol first_char(VarId x) const { return first_.at(x); }
    // Terminal rules have height 1.
    std::uint32_t height(VarId x) const { return height_.at(x); }
    // Largest height over all variables.
    std::uint32_t height() const noexcept { return max_height_; }

    // F(X)[1 .. min(m, |F(X)|)].
    std::string expand_prefix(VarId x, std::uint64_t m) const;

    // F(X)[i .. min(i + m - 1, |F(X)|)], 1-based. Throws BoundsError unless
    // 1 <= i <= |F(X)|.
    std::string access(VarId x, std::uint64_t i, std::uint64_t m) const;

    // Resumable left-to-right reader over F(X) starting at a 1-based position.
    // Construction descends once (O(height)); each next() is amortized O(1).
    class Cursor {
    public:
        Cursor(const Slp& slp, VarId x, std::uint64_t pos = 1);

        bool done() const noexcept { return remaining_ == 0; }
        std::uint64_t remaining() const noexcept { return remaining_; }
        Symbol next();

    private:
        void descend(VarId x);

        const Slp* slp_;
        std::vector<VarId> pending_;
        std::uint64_t remaining_;
    };

    friend bool operator==(const Slp& a, const Slp& b) {
        return a.root_ == b.root_ && a.rules_ == b.rules_;
    }

private:
    void check_var(VarId x) const;

    std::vector<Production> rules_;
    std::vector<std::uint64_t> length_;
    std::vector<Symbol> first_;
    std::vector<std::uint32_t> height_;
    std::uint32_t max_height_ = 0;
    VarId root_ = kNoVar;
};

// Builds the grammar over the edges of `graph` from its jump links and stores
// X(e) into every edge. `path` is the source-to-sink path spelling the text;
// the root variable is a right-leaning chain over it.
Slp build_slp(LCdawg& graph, const JumpTable& jumps, std::span<const EdgeId> path);

// Text dump: a header line `root X<id>` followed by one rule per line,
// `X<id> -> 'c'`, `X<id> -> 0xHH` for non-printable symbols, or
// `X<id> -> X<l> X<r>`.
void write_grammar(const Slp& slp, std::ostream& out);

}  // namespace lcdawg
