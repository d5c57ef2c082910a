#include "lcdawg/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>

#include "lcdawg/errors.hpp"

namespace lcdawg::oracle {
namespace {

void guard(const Text& text, std::size_t max_n, const char* who) {
    if (text.size() > max_n) {
        throw OracleLimitError(std::string(who) + ": text length " + std::to_string(text.size()) +
                               " exceeds the oracle bound " + std::to_string(max_n));
    }
}

std::string bytes(std::span<const Symbol> s) {
    return {reinterpret_cast<const char*>(s.data()), s.size()};
}

}  // namespace

std::vector<std::uint64_t> naive_find(std::span<const Symbol> text, std::span<const Symbol> pattern) {
    std::vector<std::uint64_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < pattern.size(); ++k) {
            if (text[i + k] != pattern[k]) {
                match = false;
                break;
            }
        }
        if (match) out.push_back(i + 1);
    }
    return out;
}

MaximalRepeats brute_maximal_repeats(const Text& text, bool with_sentinel, std::size_t max_n) {
    guard(text, max_n, "brute_maximal_repeats");
    const std::string s = bytes(with_sentinel ? text.terminated() : text.body());
    const std::size_t n = s.size();

    struct Tally {
        std::uint64_t occ = 0;
        std::map<char, std::uint64_t> right;
        std::map<char, std::uint64_t> left;
    };
    std::map<std::string, Tally> all;
    for (std::size_t i = 0; i < n; ++i) {
        std::string w;
        for (std::size_t j = i; j < n; ++j) {
            w.push_back(s[j]);
            Tally& t = all[w];
            ++t.occ;
            if (j + 1 < n) ++t.right[s[j + 1]];
            if (i > 0) ++t.left[s[i - 1]];
        }
    }

    auto keys = [](const std::map<char, std::uint64_t>& m) {
        std::string out;
        for (const auto& [c, count] : m) out.push_back(c);
        std::sort(out.begin(), out.end(), [](char a, char b) {
            return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
        });
        return out;
    };

    MaximalRepeats result;
    MaximalRepeat empty;
    empty.occurrences = n + 1;
    std::map<char, std::uint64_t> symbols;
    for (char c : s) ++symbols[c];
    empty.right = keys(symbols);
    empty.left = empty.right;
    result.repeats.push_back(empty);

    for (const auto& [w, t] : all) {
        if (t.occ < 2) continue;
        bool maximal = true;
        for (const auto& [c, count] : t.right) maximal = maximal && count < t.occ;
        for (const auto& [c, count] : t.left) maximal = maximal && count < t.occ;
        if (!maximal) continue;
        result.repeats.push_back(MaximalRepeat{w, t.occ, keys(t.right), keys(t.left)});
    }
    for (const MaximalRepeat& r : result.repeats) {
        result.right_extensions += r.right.size();
        result.left_extensions += r.left.size();
    }
    return result;
}

AutomatonSummary brute_minimal_automaton(const Text& text, std::size_t max_n) {
    guard(text, max_n, "brute_minimal_automaton");
    const std::string s = bytes(text.terminated());
    const std::size_t n = s.size();

    struct Info {
        std::vector<std::size_t> ends;  // exclusive end positions, ascending
        std::set<char> right;
    };
    std::map<std::string, Info> subs;
    subs[std::string()].ends.resize(n + 1);
    std::iota(subs[std::string()].ends.begin(), subs[std::string()].ends.end(), std::size_t{0});
    for (char c : s) subs[std::string()].right.insert(c);
    for (std::size_t i = 0; i < n; ++i) {
        std::string w;
        for (std::size_t j = i; j < n; ++j) {
            w.push_back(s[j]);
            Info& info = subs[w];
            info.ends.push_back(j + 1);
            if (j + 1 < n) info.right.insert(s[j + 1]);
        }
    }
    for (auto& [w, info] : subs) std::sort(info.ends.begin(), info.ends.end());

    // Node strings: the empty string, right-branching strings and suffixes.
    auto is_node = [&](const std::string& w, const Info& info) {
        return w.empty() || info.right.size() >= 2 || info.ends.back() == n;
    };

    std::map<std::vector<std::size_t>, std::string> classes;  // end set -> longest member
    for (const auto& [w, info] : subs) {
        if (!is_node(w, info)) continue;
        auto& longest = classes[info.ends];
        if (w.size() > longest.size()) longest = w;
    }

    AutomatonSummary out;
    out.node_count = classes.size();
    for (const auto& [ends, value] : classes) {
        out.values.insert(value);
        out.edge_count += subs.at(value).right.size();
    }
    return out;
}

std::vector<LzFactor> lz77_parse(std::span<const Symbol> text) {
    std::vector<LzFactor> out;
    const std::size_t n = text.size();
    std::size_t i = 0;
    std::vector<int> u;
    std::vector<std::size_t> z;
    while (i < n) {
        // Z-function of text[i..] # text; the value at text position j is the
        // longest common prefix of text[j..] and text[i..].
        u.assign(text.begin() + static_cast<std::ptrdiff_t>(i), text.end());
        u.push_back(-1);
        const std::size_t offset = u.size();
        u.insert(u.end(), text.begin(), text.begin() + static_cast<std::ptrdiff_t>(i));
        u.insert(u.end(), text.begin() + static_cast<std::ptrdiff_t>(i), text.end());
        z.assign(u.size(), 0);
        for (std::size_t k = 1, l = 0, r = 0; k < u.size(); ++k) {
            if (k < r) z[k] = std::min(r - k, z[k - l]);
            while (k + z[k] < u.size() && u[z[k]] == u[k + z[k]]) ++z[k];
            if (k + z[k] > r) {
                l = k;
                r = k + z[k];
            }
        }
        std::size_t best_len = 0;
        std::size_t best_src = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (z[offset + j] > best_len) {
                best_len = z[offset + j];
                best_src = j;
            }
        }
        if (best_len == 0) {
            out.push_back(LzFactor{0, 0, text[i]});
            ++i;
        } else {
            out.push_back(LzFactor{best_src, best_len, 0});
            i += best_len;
        }
    }
    return out;
}

std::uint64_t bwt_runs(std::span<const Symbol> terminated) {
    const std::size_t n = terminated.size();
    if (n == 0) return 0;
    std::vector<std::size_t> sa(n);
    std::iota(sa.begin(), sa.end(), std::size_t{0});
    const Symbol* s = terminated.data();
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
        std::size_t la = n - a;
        std::size_t lb = n - b;
        int c = std::memcmp(s + a, s + b, std::min(la, lb));
        return c != 0 ? c < 0 : la < lb;
    });
    std::uint64_t runs = 0;
    Symbol prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Symbol c = s[(sa[k] + n - 1) % n];
        if (k == 0 || c != prev) ++runs;
        prev = c;
    }
    return runs;
}

}  // namespace lcdawg::oracle
