#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lcdawg/text.hpp"

// Cross-checks of a built index against the brute-force oracles and the
// structural properties of the construction. Backs the `verify` command and
// the acceptance suite.
namespace lcdawg::verify {

struct Options {
    // Texts up to this length are also checked against the automaton and
    // maximal-repeat oracles.
    std::size_t max_oracle_n = 300;
    std::size_t patterns = 1000;
    std::size_t extract_probes = 10000;
    // Compare each edge label character by character against the text.
    bool check_labels = true;
    bool roundtrip = true;
};

struct Property {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_failure;
};

class Report {
public:
    void record(const std::string& name, bool ok, const std::string& detail = {});
    // Keeps the largest value seen under `name` (measured constants).
    void observe(const std::string& name, double value);

    bool ok() const;
    bool ok(const std::string& name) const;
    const std::map<std::string, Property>& properties() const { return properties_; }
    const std::map<std::string, double>& observations() const { return observed_; }

    // One line per property: PASS/FAIL, name, counts, first failure.
    void print(std::ostream& out) const;

private:
    std::map<std::string, Property> properties_;
    std::map<std::string, double> observed_;
};

// Runs every check on `text`; probes are drawn from a generator seeded with
// `seed`.
void check_text(const Text& text, const Options& options, std::uint64_t seed, Report& report);

// Text families used by the verification corpus.
std::string random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma);
std::string fibonacci_word(std::size_t n);
std::string thue_morse(std::size_t n);
std::string periodic(std::size_t n, const std::string& period);

}  // namespace lcdawg::verify
