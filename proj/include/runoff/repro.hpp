#pragma once

#include <string>
#include <vector>

namespace runoff {

// One named assertion inside a reproduction suite.
struct SuiteCheck {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteCheck> checks;
    // Every claimed manipulation success across the suite, and how many of
    // those were re-verified from the certificate alone.
    long long yes_count = 0;
    long long yes_verified = 0;
    double seconds = 0.0;

    bool pass() const;
    const SuiteCheck* check(const std::string& label) const;
};

// The seeded reproduction experiments. All are deterministic: fixed seeds,
// no clock or environment input, byte-identical tables on repeated runs.
//
//   greedy-counterexample  the four-candidate election where the greedy
//                          ballot wins round one but loses the runoff, while
//                          another ballot wins outright
//   veto-sweep             Veto constructions from seeded cover instances:
//                          solver verdict == oracle in both runoff modes,
//                          plus prescribed certificates on covered instances
//   halfapproval-forward   covered instances -> HalfApproval construction
//                          size and certificate checks
//   plurality              weighted Plurality fast path == exhaustive
//   bucket                 ballot-type bucket search == exhaustive
//   greedy-single          single-round greedy success == manipulability
//   semantics              decisive-stop vs always-runoff winner sets
SuiteReport suite_greedy_counterexample();
SuiteReport suite_veto_sweep();
SuiteReport suite_halfapproval_forward();
SuiteReport suite_plurality();
SuiteReport suite_bucket();
SuiteReport suite_greedy_single();
SuiteReport suite_semantics();

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name. Exceptions inside a
// suite are caught and turned into a failing check.
SuiteReport run_suite(const std::string& name);

std::string format_report(const SuiteReport& report);

}  // namespace runoff
