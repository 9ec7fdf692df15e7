// The release gate: one line per pinned criterion, nonzero exit on any miss.
// Criteria 1-8 ride on the deterministic reproduction suites; criterion 9 is
// the cross-suite soundness invariant (every claimed success re-verified from
// its certificate alone).

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "runoff/repro.hpp"

using namespace runoff;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool labels_pass(const SuiteReport& report, std::initializer_list<const char*> labels) {
    for (const char* label : labels) {
        const auto* c = report.check(label);
        if (!c || !c->pass) return false;
    }
    return true;
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    return std::string(buf) + "s";
}

std::string label_detail(const SuiteReport& report, const char* label) {
    const auto* c = report.check(label);
    return c ? c->detail : "check '" + std::string(label) + "' missing";
}

}  // namespace

int main() {
    std::map<std::string, SuiteReport> reports;
    for (const auto& name : suite_names()) reports.emplace(name, run_suite(name));

    const auto& gap = reports.at("greedy-counterexample");
    const auto& veto = reports.at("veto-sweep");
    const auto& half = reports.at("halfapproval-forward");
    const auto& plur = reports.at("plurality");
    const auto& buck = reports.at("bucket");
    const auto& single = reports.at("greedy-single");
    const auto& sem = reports.at("semantics");

    long long claimed = 0, reverified = 0;
    for (const auto* r : {&veto, &half, &plur, &buck, &single}) {
        claimed += r->yes_count;
        reverified += r->yes_verified;
    }

    std::vector<Criterion> criteria;
    criteria.push_back({"greedy counterexample reproduced exactly",
                        gap.pass() && gap.seconds < 1.0,
                        "tallies 1,3,2,0; greedy ballot loses the runoff; p>b>c>a wins; " +
                            seconds(gap.seconds) + " (budget 1s)"});
    criteria.push_back({"veto constructions match the cover oracle in both runoff modes",
                        labels_pass(veto, {"sample-size", "equivalence"}) && veto.seconds < 600.0,
                        label_detail(veto, "sample-size") + "; " + label_detail(veto, "equivalence") +
                            "; " + seconds(veto.seconds) + " (budget 600s)"});
    criteria.push_back({"prescribed veto cover certificates verify with the exact winner sets",
                        labels_pass(veto, {"forward-certificates"}),
                        label_detail(veto, "forward-certificates")});
    criteria.push_back({"halfapproval constructions: sizes exact, cover certificates verify",
                        half.pass(), label_detail(half, "forward-direction")});
    criteria.push_back({"weighted plurality fast path agrees with exhaustive search", plur.pass(),
                        label_detail(plur, "fastpath-equivalence")});
    criteria.push_back({"ballot-type bucket search agrees with exhaustive search", buck.pass(),
                        label_detail(buck, "bucket-equivalence")});
    criteria.push_back({"single-round greedy success coincides with manipulability", single.pass(),
                        label_detail(single, "greedy-exactness")});
    criteria.push_back({"decisive-stop and always-runoff semantics pick the same winners",
                        sem.pass(), label_detail(sem, "semantics-coincidence")});
    criteria.push_back({"every claimed success re-verifies from its certificate",
                        claimed > 0 && reverified == claimed,
                        std::to_string(reverified) + "/" + std::to_string(claimed) +
                            " re-verified across the sweeps"});

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        if (c.pass) ++passed;
        std::cout << "[" << (i + 1) << "] " << (c.pass ? "PASS" : "FAIL") << " " << c.name << " - "
                  << c.detail << "\n";
    }
    std::cout << "ACCEPTANCE: " << passed << "/" << criteria.size() << " PASS\n";

    if (passed != static_cast<int>(criteria.size())) {
        std::cerr << "\nfull suite reports for the record:\n";
        for (const auto& entry : reports) std::cerr << format_report(entry.second);
        return 1;
    }
    return 0;
}
