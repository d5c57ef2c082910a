#include "lcdawg/slp.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "lcdawg/errors.hpp"

namespace lcdawg {

Slp::Slp(std::vector<Production> rules, VarId root) : rules_(std::move(rules)), root_(root) {
    const std::size_t count = rules_.size();
    if (root_ >= count) throw ConsistencyError("root variable out of range");
    length_.resize(count);
    first_.resize(count);
    height_.resize(count);
    for (VarId x = 0; x < count; ++x) {
        const Production& p = rules_[x];
        if (!p.pair) {
            length_[x] = 1;
            first_[x] = p.symbol;
            height_[x] = 1;
        } else {
            if (p.left >= x || p.right >= x) {
                throw ConsistencyError("rule X" + std::to_string(x) +
                                       " refers to a variable that is not defined before it");
            }
            length_[x] = length_[p.left] + length_[p.right];
            if (length_[x] < length_[p.left]) throw ConsistencyError("expansion length overflow");
            first_[x] = first_[p.left];
            height_[x] = 1 + std::max(height_[p.left], height_[p.right]);
        }
        max_height_ = std::max(max_height_, height_[x]);
    }
}

void Slp::check_var(VarId x) const {
    if (x >= rules_.size()) throw BoundsError("unknown variable X" + std::to_string(x));
}

std::string Slp::expand_prefix(VarId x, std::uint64_t m) const {
    check_var(x);
    std::string out;
    Cursor cur(*this, x);
    std::uint64_t take = std::min(m, length_[x]);
    out.reserve(take);
    while (take-- > 0) out.push_back(static_cast<char>(cur.next()));
    return out;
}

std::string Slp::access(VarId x, std::uint64_t i, std::uint64_t m) const {
    check_var(x);
    if (i < 1 || i > length_[x]) {
        throw BoundsError("position " + std::to_string(i) + " outside [1, " +
                          std::to_string(length_[x]) + "]");
    }
    Cursor cur(*this, x, i);
    std::uint64_t take = std::min(m, cur.remaining());
    std::string out;
    out.reserve(take);
    while (take-- > 0) out.push_back(static_cast<char>(cur.next()));
    return out;
}

Slp::Cursor::Cursor(const Slp& slp, VarId x, std::uint64_t pos) : slp_(&slp), remaining_(0) {
    slp.check_var(x);
    if (pos < 1 || pos > slp.length_[x]) {
        throw BoundsError("cursor position " + std::to_string(pos) + " outside [1, " +
                          std::to_string(slp.length_[x]) + "]");
    }
    remaining_ = slp.length_[x] - pos + 1;
    VarId cur = x;
    while (slp.rules_[cur].pair) {
        const Production& p = slp.rules_[cur];
        if (pos <= slp.length_[p.left]) {
            pending_.push_back(p.right);
            cur = p.left;
        } else {
            pos -= slp.length_[p.left];
            cur = p.right;
        }
    }
    pending_.push_back(cur);
}

void Slp::Cursor::descend(VarId x) {
    while (slp_->rules_[x].pair) {
        pending_.push_back(slp_->rules_[x].right);
        x = slp_->rules_[x].left;
    }
    pending_.push_back(x);
}

Symbol Slp::Cursor::next() {
    if (remaining_ == 0) throw BoundsError("cursor exhausted");
    VarId x = pending_.back();
    pending_.pop_back();
    if (slp_->rules_[x].pair) {
        descend(x);
        x = pending_.back();
        pending_.pop_back();
    }
    --remaining_;
    return slp_->rules_[x].symbol;
}

Slp build_slp(LCdawg& graph, const JumpTable& jumps, std::span<const EdgeId> path) {
    const std::size_t edges = graph.edge_count();
    if (jumps.size() != edges) throw ConsistencyError("jump table size differs from edge count");
    if (path.empty()) throw ConsistencyError("text path is empty");

    // Provisional ids: X(e) = e, intermediate and root-chain variables after.
    std::vector<Production> tmp(edges);
    std::vector<VarId> chain_var(edges, kNoVar);

    // Variable deriving lab(f) lab(next) ... down to the first type-1 node.
    auto chain = [&](EdgeId f) -> VarId {
        std::vector<EdgeId> pending;
        EdgeId e = f;
        while (!graph.is_type1(graph.edge(e).lo) && chain_var[e] == kNoVar) {
            pending.push_back(e);
            e = graph.first_edge(graph.edge(e).lo);
        }
        VarId tail = graph.is_type1(graph.edge(e).lo) ? static_cast<VarId>(e) : chain_var[e];
        while (!pending.empty()) {
            EdgeId g = pending.back();
            pending.pop_back();
            chain_var[g] = static_cast<VarId>(tmp.size());
            tmp.push_back(Production::binary(static_cast<VarId>(g), tail));
            tail = chain_var[g];
        }
        return tail;
    };

    for (EdgeId e = 0; e < edges; ++e) {
        const Edge& ed = graph.edge(e);
        if (ed.slen == 1) {
            tmp[e] = Production::terminal(ed.first);
            continue;
        }
        EdgeId first = jumps[e];
        if (first == kNoEdge) throw ConsistencyError("missing jump link for edge " + std::to_string(e));
        NodeId mid = graph.edge(first).lo;
        if (graph.is_type1(mid)) {
            throw ConsistencyError("jump link of edge " + std::to_string(e) + " has a single edge");
        }
        tmp[e] = Production::binary(static_cast<VarId>(first), chain(graph.first_edge(mid)));
    }

    VarId root = static_cast<VarId>(path.back());
    for (std::size_t i = path.size() - 1; i-- > 0;) {
        tmp.push_back(Production::binary(static_cast<VarId>(path[i]), root));
        root = static_cast<VarId>(tmp.size() - 1);
    }

    // Renumber in DFS post-order so that every rule refers to smaller ids.
    enum class Mark : std::uint8_t { fresh, active, done };
    const std::size_t count = tmp.size();
    std::vector<Mark> mark(count, Mark::fresh);
    std::vector<VarId> renumber(count, kNoVar);
    std::vector<Production> rules;
    rules.reserve(count);
    std::vector<VarId> stack;
    for (VarId start = 0; start < count; ++start) {
        if (mark[start] != Mark::fresh) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            VarId x = stack.back();
            const Production& p = tmp[x];
            if (mark[x] == Mark::done) {
                stack.pop_back();
                continue;
            }
            if (mark[x] == Mark::fresh) {
                // Entered nodes that are not done form the current DFS path.
                mark[x] = Mark::active;
                if (p.pair) {
                    for (VarId child : {p.right, p.left}) {
                        if (mark[child] == Mark::active) {
                            throw ConsistencyError("dependency cycle through variable " +
                                                   std::to_string(child));
                        }
                        if (mark[child] == Mark::fresh) stack.push_back(child);
                    }
                }
                continue;
            }
            stack.pop_back();
            mark[x] = Mark::done;
            renumber[x] = static_cast<VarId>(rules.size());
            rules.push_back(p.pair ? Production::binary(renumber[p.left], renumber[p.right]) : p);
        }
    }

    for (EdgeId e = 0; e < edges; ++e) graph.set_var(e, renumber[e]);
    return Slp(std::move(rules), renumber[root]);
}

void write_grammar(const Slp& slp, std::ostream& out) {
    out << "root X" << slp.root() << '\n';
    for (VarId x = 0; x < slp.size(); ++x) {
        const Production& p = slp.rule(x);
        out << 'X' << x << " -> ";
        if (p.pair) {
            out << 'X' << p.left << " X" << p.right;
        } else if (p.symbol >= 0x21 && p.symbol <= 0x7e && p.symbol != '\'' && p.symbol != '\\') {
            out << '\'' << static_cast<char>(p.symbol) << '\'';
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "0x%02X", p.symbol);
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace lcdawg
