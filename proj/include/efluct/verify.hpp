#pragma once

#include "efluct/limits.hpp"
#include "efluct/wick.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace efluct {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;

    long passed() const;
    long failed() const;
    bool ok() const { return failed() == 0; }
    void add(std::string name, bool pass, std::string detail = {});
};

struct VerifyOptions {
    int max_total = 14;        // counts: p + q
    int max_letters = 10;      // oracle corpus word pairs
    int corpus_size = 60;
    std::uint64_t corpus_seed = 0x5eed2024;
};

// Deterministic word pairs: named families, then random words (1-2 colors,
// mixed types) drawn from a fixed-seed generator.
std::vector<WordPair> oracle_corpus(int max_letters, int size, std::uint64_t seed);
// Three-word systems (complex, <= 12 letters) for the third cumulant.
std::vector<TraceWordSystem> cumulant3_corpus(std::uint64_t seed);

SuiteReport verify_counts(const VerifyOptions& opt = {});
SuiteReport verify_spoke_arc(const VerifyOptions& opt = {});
SuiteReport verify_closed_vs_semiclosed(const VerifyOptions& opt = {});
// Oracle N^0 agreement, exponent structure and first moments.
SuiteReport verify_oracle(const VerifyOptions& opt = {});
SuiteReport verify_connectedness(const VerifyOptions& opt = {});
SuiteReport verify_cumulant3(const VerifyOptions& opt = {});
SuiteReport verify_fuss_catalan(const VerifyOptions& opt = {});
SuiteReport verify_real_transpose(const VerifyOptions& opt = {});
SuiteReport verify_freeness(const VerifyOptions& opt = {});

const std::vector<std::string>& suite_names();
// Throws InputError for unknown names; "all" runs every suite.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt = {});

nlohmann::ordered_json to_json(const SuiteReport& r);

} // namespace efluct
