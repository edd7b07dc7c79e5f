#pragma once

#include "plueckerfan/json_io.hpp"
#include "plueckerfan/parallel.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pf {

struct SuiteFailure {
    std::string check;
    Json reproducer;
    std::string expected, actual;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::string poset;  // poset id when the suite runs on posets
    std::uint64_t seed = 0;
    std::uint64_t checks = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> skipped;  // checks not run, with reasons
    Json notes = Json::object();       // recorded observations, not asserted
    double wall_seconds = 0;

    bool ok() const { return failures.empty(); }
    void expect(bool ok, const std::string& check, Json reproducer, const std::string& expected = "",
                const std::string& actual = "");
    void merge(const SuiteReport& other);
};

// Reports are deterministic except for the wall time, which is only
// serialized on request.
Json report_json(const SuiteReport& r, bool timing);
std::string report_text(const SuiteReport& r);

struct SuiteOptions {
    int n = 0;  // 0 selects the suite default
    std::uint64_t seed = 1;
    int trials = kDefaultTrials;
    std::size_t samples = 1000;
    std::optional<Poset> poset;  // ehrhart and minkowski only
    int random_posets = 0;       // ehrhart and minkowski: extra seeded random posets
    Exec exec = Exec::Parallel;
};

const std::vector<std::string>& suite_names();
int default_n(const std::string& suite);
// Throws InvalidArgument for unknown suites and CapacityError on size guards.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt);

// Pieces of the suites, also used by the acceptance run.
SuiteReport straightening_laws(LatticeKind kind, int n, int trials, std::uint64_t seed, Exec exec);
SuiteReport tau_suite(int n);
SuiteReport ehrhart_suite(const Poset& p, const std::string& id, std::uint64_t seed);
SuiteReport minkowski_suite(const Poset& p, const std::string& id, std::uint64_t seed);
SuiteReport cone_witnesses(ConeTarget target, int n, Exec exec);
SuiteReport cone_soundness(ConeTarget target, int n, std::size_t samples, std::uint64_t seed, Exec exec);
SuiteReport theta_kernel(int n, std::uint64_t seed);
SuiteReport convex_suite(int n, std::uint64_t seed);
SuiteReport counts_suite(int n);
SuiteReport asl_suite(int n);

// Random partial order on m elements p0..p{m-1}: i < j with probability prob, closed transitively.
Poset random_poset(int m, double prob, std::mt19937_64& rng);
// Posets of the ehrhart corpus: P(M(n)) for the given n plus seeded random posets.
std::vector<std::pair<std::string, Poset>> poset_corpus(const std::vector<int>& ns, int random_count,
                                                        std::uint64_t seed);
inline constexpr std::size_t kMaxEhrhartPoset = 8;

}  // namespace pf
