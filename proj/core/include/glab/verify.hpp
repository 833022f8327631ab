#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glab/graph.hpp"
#include "glab/limits.hpp"

namespace glab {

enum class Verdict { Holds, Violated, Skipped };

std::string_view to_string(Verdict v);

using Detail = std::variant<long long, double, std::string, std::vector<int>>;

struct CheckResult {
    std::string check;
    std::string graph6;  // canonical when n <= 10
    Verdict verdict = Verdict::Skipped;
    std::string reason;   // why a check was skipped
    bool equality = false;  // the bound is attained (when that is meaningful)
    std::vector<std::pair<std::string, Detail>> details;
};

// eq2 eq34 eq5 thm22 cor23 thm24 thm26i thm26iii cor27 cor28 cor29 changhsu
// lem31 thm32 cor33 thm43 thm44 thm45 thm46 cor42 conj2 conj1 zs_min
const std::vector<std::string>& all_check_ids();

CheckResult run_check(const Graph& g, const std::string& id,
                      const SolverLimits& limits = SolverLimits::from_env());

struct CheckCounts {
    long long holds = 0;
    long long violated = 0;
    long long skipped = 0;
};

struct SuiteOptions {
    std::vector<int> orders;                 // enumerate_graphs(n) per entry
    std::optional<std::string> corpus_file;  // graph6 lines or one edge list
    std::vector<std::string> checks;         // empty = all checks
    int jobs = 1;
    SolverLimits limits = SolverLimits::from_env();
};

struct SuiteReport {
    std::string corpus;
    std::vector<std::string> checks;
    long long total_graphs = 0;
    std::map<std::string, CheckCounts> counts;
    std::vector<CheckResult> results;  // every (graph, check) pair, graph-major
    std::vector<CheckResult> violations;
    std::map<std::string, std::vector<std::string>> equality_census;
    // Reported on stderr by the CLI; kept out of the serialized payloads so
    // repeated runs stay byte-identical.
    double elapsed_seconds = 0.0;
};

// Every (graph, check) pair evaluated; deterministic regardless of jobs.
// Violations are re-verified through the brute-force oracles before being
// reported; a violation that fails re-verification throws.
SuiteReport run_suite(const SuiteOptions& options);

std::string to_json(const SuiteReport& report);
// One row per (graph, check): graph6,check,verdict,detail
std::string to_csv(const SuiteReport& report);
bool has_violations(const SuiteReport& report);

// Scans enumerated C4-free classes (conj2) or C4-free regular classes (conj1)
// up to max_n <= 8; a returned witness has been re-verified by brute force.
std::optional<CheckResult> search_counterexample(
    const std::string& conjecture, int max_n,
    const SolverLimits& limits = SolverLimits::from_env());

// Corpus-level minimum-order claim for triangle-free Grundy number k
// (2 <= k <= 5): no triangle-free graph on fewer than 2k-2 vertices reaches
// Grundy number k, and b_graph(k) attains it on exactly 2k-2.
CheckResult zs_minimum_order(int k, const SolverLimits& limits = SolverLimits::from_env());

}  // namespace glab
