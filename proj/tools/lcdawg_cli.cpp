#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcdawg/errors.hpp"
#include "lcdawg/index.hpp"
#include "lcdawg/measures.hpp"
#include "lcdawg/persistence.hpp"
#include "lcdawg/slp.hpp"
#include "lcdawg/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3, kValidation = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lcdawg::IoError("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw lcdawg::IoError("read failed: " + path);
    return data;
}

bool looks_like_index(const std::string& data) { return data.rfind("LCDW", 0) == 0; }

std::string decode_hex(const std::string& hex) {
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw UsageError("invalid hex digit '" + std::string(1, c) + "'");
    };
    if (hex.size() % 2 != 0) throw UsageError("hex pattern has an odd number of digits");
    std::string out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return out;
}

lcdawg::IndexStats stats_of(const std::string& data, bool as_text, const lcdawg::MeasureOptions& opts) {
    if (!as_text && looks_like_index(data)) {
        auto bytes = lcdawg::as_symbols(data);
        return lcdawg::measure_index(lcdawg::deserialize(bytes), opts);
    }
    return lcdawg::measure_text(lcdawg::Text::from_string(data), opts);
}

void print_stats(const lcdawg::IndexStats& stats, const std::string& format) {
    if (format == "lines") {
        std::cout << lcdawg::format_stats_document(stats);
    } else {
        std::cout << lcdawg::format_stats_line(stats) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-index over a byte string: build, query, extract, measure and verify"};
    app.require_subcommand(1);

    std::string input, output, index_path, pattern, format = "line";
    bool no_check = false;
    auto* build = app.add_subcommand("build", "Build an index file from a text file");
    build->add_option("input", input, "Text file (raw bytes, no zero byte)")->required();
    build->add_option("output", output, "Index file to write")->required();
    build->add_flag("--no-check", no_check, "Skip the fingerprint check of the grammar");
    build->add_option("--format", format, "Stats output: line or lines")
        ->check(CLI::IsMember({"line", "lines"}));

    bool count_only = false, hex = false;
    std::optional<std::uint64_t> limit;
    auto* find = app.add_subcommand("find", "Report the occurrences of a pattern");
    find->add_option("index", index_path, "Index file")->required();
    find->add_option("pattern", pattern, "Pattern (literal, or hex bytes with --hex)")->required();
    find->add_flag("--count", count_only, "Print only the number of occurrences");
    find->add_option("--limit", limit, "Print at most K positions")->check(CLI::NonNegativeNumber);
    find->add_flag("--hex", hex, "Pattern is a hex byte string such as 6263ff");

    std::uint64_t pos = 0, len = 0;
    auto* extract = app.add_subcommand("extract", "Write T[pos .. pos+len-1] to standard output");
    extract->add_option("index", index_path, "Index file")->required();
    extract->add_option("--pos", pos, "1-based start position")->required();
    extract->add_option("--len", len, "Number of bytes")->required();

    bool lz = false, bwt = false, as_text = false;
    auto* stats = app.add_subcommand("stats", "Print measures of a text or index file");
    stats->add_option("path", input, "Text or index file")->required();
    stats->add_flag("--lz", lz, "Also compute the LZ77 factor count z");
    stats->add_flag("--bwt-runs", bwt, "Also compute the BWT run count r");
    stats->add_flag("--text", as_text, "Treat the file as text even if it looks like an index");
    stats->add_option("--format", format, "Output: line or lines")->check(CLI::IsMember({"line", "lines"}));

    lcdawg::verify::Options vopts;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Cross-check the index against brute-force oracles");
    verify->add_option("input", input, "Text file")->required();
    verify->add_option("--max-n", vopts.max_oracle_n, "Oracle bound and length of generated texts");
    verify->add_option("--trials", trials, "Number of generated random texts");
    verify->add_option("--seed", seed, "Seed of the generated texts and probes");
    verify->add_option("--patterns", vopts.patterns, "Probed patterns per text");
    verify->add_option("--probes", vopts.extract_probes, "Extraction probes per text");

    auto* grammar = app.add_subcommand("grammar", "Print the grammar of an index, one rule per line");
    grammar->add_option("index", index_path, "Index file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*build) {
            std::string data = read_file(input);
            lcdawg::Text text = lcdawg::Text::from_string(data);
            lcdawg::BuildOptions bopts;
            bopts.check_fingerprints = !no_check;
            lcdawg::BuildResult built = lcdawg::build_pipeline(text, bopts);
            lcdawg::save_index(built.index, output);
            print_stats(lcdawg::measure_build(built, text), format);
        } else if (*find) {
            std::string p = hex ? decode_hex(pattern) : pattern;
            if (p.empty()) throw UsageError("empty pattern");
            lcdawg::Index index = lcdawg::load_index(index_path);
            if (count_only) {
                std::cout << index.count(p) << '\n';
            } else {
                auto occ = index.find(p);
                std::size_t shown = limit ? std::min<std::uint64_t>(*limit, occ.size()) : occ.size();
                for (std::size_t k = 0; k < shown; ++k) std::cout << occ[k] << '\n';
            }
        } else if (*extract) {
            lcdawg::Index index = lcdawg::load_index(index_path);
            if (pos < 1 || pos > index.size()) {
                throw UsageError("--pos must lie in [1, " + std::to_string(index.size()) + "]");
            }
            std::string s = index.extract(pos, len);
            std::cout.write(s.data(), static_cast<std::streamsize>(s.size()));
        } else if (*stats) {
            print_stats(stats_of(read_file(input), as_text, {lz, bwt}), format);
        } else if (*verify) {
            lcdawg::verify::Report report;
            std::string data = read_file(input);
            lcdawg::verify::check_text(lcdawg::Text::from_string(data), vopts, seed, report);
            static constexpr unsigned kSigmas[] = {2, 4, 26, 255};
            for (std::size_t t = 0; t < trials; ++t) {
                std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + t);
                std::size_t n = 1 + rng() % std::max<std::size_t>(vopts.max_oracle_n, 1);
                std::string s = lcdawg::verify::random_text(rng, n, kSigmas[t % 4]);
                lcdawg::verify::check_text(lcdawg::Text::from_string(s), vopts, rng(), report);
            }
            report.print(std::cout);
            return report.ok() ? kOk : kMismatch;
        } else if (*grammar) {
            lcdawg::write_grammar(lcdawg::load_index(index_path).slp(), std::cout);
        }
        std::cout.flush();
        return std::cout ? kOk : kIo;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const lcdawg::BoundsError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const lcdawg::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const lcdawg::FormatError& e) {
        std::cerr << "invalid index file (" << lcdawg::to_string(e.code()) << "): " << e.what() << '\n';
        return kValidation;
    } catch (const lcdawg::InputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kValidation;
    } catch (const lcdawg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
}
