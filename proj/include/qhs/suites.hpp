#ifndef QHS_SUITES_HPP
#define QHS_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qhs/datum.hpp"

namespace qhs {

struct RunConfig {
    std::string datum_name = "datum";
    std::vector<std::string> suites;  // empty = all registered suites
    int max_height = 3;
    int order = 12;
    std::string pi_mode = "generic";  // generic | plus | minus
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out_path;
    bool mutate_fixture = false;  // flips one relation constant; test hook
    bool timings = false;         // include wall time in the report file

    void validate() const;
};

struct CheckResult {
    std::string id;
    std::string refs;    // the identity under test, by name
    std::string inputs;
    bool pass = false;
    std::string witness = "-";
    long millis = 0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
    long total_millis = 0;
};

/// Registered suite names, in canonical order.
const std::vector<std::string>& suite_registry();

/// Run the selected suites; deterministic output for a fixed config,
/// independent of the job count.
SuiteReport run_suites(const Superdatum& d, const QTable& qt, const GammaTable& gm,
                       const RunConfig& cfg);

/// One record per check, sorted by id; wall times only when cfg.timings.
std::string render_report(const RunConfig& cfg, const SuiteReport& rep);

/// The identity a check id verifies, in plain mathematical terms.
std::string explain_check(const std::string& id);
bool known_check(const std::string& id);

}  // namespace qhs

#endif
