#pragma once

// Conjecture verification suites and the JSON run report.
//
// A failing conjecture is report content, never an exception. Only resource
// problems (a groundstate size beyond the cache bound) propagate.

#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "looplab/cpl.hpp"
#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab {

struct Verdict {
    Verdict() = default;
    explicit Verdict(Matching m, std::vector<std::string> f = {}) : pi(std::move(m)), failures(std::move(f)) {}

    Matching pi;
    std::vector<std::string> failures;  // empty means pass
    nlohmann::json data = nlohmann::json::object();
    bool pass() const noexcept { return failures.empty(); }
};

struct ConjectureReport {
    ConjectureReport() = default;
    ConjectureReport(std::string i, int size) : id(std::move(i)), n(size) {}

    std::string id;  // C1..C4, C1tau..C4tau
    int n = 0;
    std::vector<Verdict> verdicts;     // one per matching, lexicographic
    nlohmann::json aggregate = nlohmann::json::object();
    std::vector<std::string> counterexamples;
    std::optional<double> seconds;

    bool pass() const noexcept { return counterexamples.empty(); }
    nlohmann::json to_json() const;
};

// Memoizes A_pi(t) and Psi_pi(tau, t) over one run.
class Harness {
public:
    explicit Harness(GroundStateCache& cache) : cache_(cache) {}

    GroundStateCache& cache() noexcept { return cache_; }
    const RatPoly& a(const Matching& pi);
    mpz_class g(const Matching& pi);
    const TauTPoly& psi(const Matching& pi);

    ConjectureReport verify_c1(int n);
    ConjectureReport verify_c2(int n);
    ConjectureReport verify_c3(int n);
    ConjectureReport verify_c4(int n);
    // C1tau, C2tau, C3tau, C4tau in that order.
    std::vector<ConjectureReport> verify_tau(int n);

private:
    GroundStateCache& cache_;
    std::map<Matching, RatPoly> a_;
    std::map<Matching, TauTPoly> psi_;
};

// Sample points for the bivariate no-real-root check.
const std::vector<mpq_class>& tau_samples();

struct RunConfig {
    int n_min = 1;
    int n_max = 4;
    std::vector<std::string> suites{"c1", "c2", "c3", "c4", "tau"};
    bool extended = false;
    std::optional<std::filesystem::path> cache_dir;
    bool timing = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws UsageError for unknown suites, empty or inverted ranges, and sizes
// past the routine bound (4, or 5 with extended).
void validate(const RunConfig& cfg);

struct RunResult {
    nlohmann::json report;
    bool pass = false;
};

// Runs the suites for n_min..n_max. ResourceError is recorded in the report
// under "error" with the offending size and makes the run fail.
RunResult run_report(const RunConfig& cfg);

}  // namespace looplab
