#include "runoff/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "runoff/reductions.hpp"
#include "runoff/solvers.hpp"

namespace runoff {

namespace {

// splitmix64; fixed seeds keep every suite reproducible.
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        unsigned long long x = (state += 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
};

Ballot random_ballot(Rng& rng, int m) {
    Ballot b(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) b[c] = c;
    for (int i = m - 1; i > 0; --i) std::swap(b[i], b[rng.below(i + 1)]);
    return b;
}

Election random_election(Rng& rng, int m, int max_votes, int max_weight, int max_count = 1) {
    Election e;
    for (int c = 0; c < m; ++c) e.candidates.push_back({c, std::string(1, static_cast<char>('a' + c))});
    const int nv = rng.below(max_votes + 1);
    for (int v = 0; v < nv; ++v)
        e.votes.push_back({random_ballot(rng, m), 1 + rng.below(max_weight), 1 + rng.below(max_count)});
    return e;
}

ScoringProtocol cycle_protocol(int index) {
    switch (index % 6) {
        case 0: return ScoringProtocol::plurality();
        case 1: return ScoringProtocol::veto();
        case 2: return ScoringProtocol::borda();
        case 3: return ScoringProtocol::half_approval();
        case 4: return ScoringProtocol::triviality();
        default: return ScoringProtocol::from_vector({2, 1, 0, 0});
    }
}

ScoringProtocol cycle_builtin(int index) { return cycle_protocol(index % 5); }

std::string show_count(long long a, const std::string& noun) {
    return std::to_string(a) + " " + noun + (a == 1 ? "" : "s");
}

// Re-verifies a claimed success from the certificate alone and maintains the
// suite's soundness tally.
bool recheck_yes(SuiteReport& report, const ManipulationInstance& instance, const Certificate& cert,
                 ThenSemantics semantics = ThenSemantics::DecisiveStop) {
    ++report.yes_count;
    const auto res = verify_certificate(instance, cert, semantics);
    if (res.success()) {
        ++report.yes_verified;
        return true;
    }
    return false;
}

std::vector<std::array<int, 3>> triple_pool(int k) {
    std::vector<std::array<int, 3>> pool;
    for (int a = 1; a <= 3 * k; ++a)
        for (int b = a + 1; b <= 3 * k; ++b)
            for (int c = b + 1; c <= 3 * k; ++c) pool.push_back({a, b, c});
    return pool;
}

// The election behind the greedy counterexample: scores (2,1,0,0),
// nonmanipulators a>p>c>b and b>a>c>p, one manipulator, preferred p.
Election counterexample_election() {
    Election e;
    e.candidates = {{0, "p"}, {1, "a"}, {2, "b"}, {3, "c"}};
    e.votes = {{{1, 0, 3, 2}, 1, 1}, {{2, 1, 3, 0}, 1, 1}};
    return e;
}

}  // namespace

bool SuiteReport::pass() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

const SuiteCheck* SuiteReport::check(const std::string& label) const {
    for (const auto& c : checks) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

SuiteReport suite_greedy_counterexample() {
    SuiteReport report;
    report.name = "greedy-counterexample";
    const Election e = counterexample_election();
    const auto protocol = ScoringProtocol::from_vector({2, 1, 0, 0});
    const ManipulationInstance inst{e, protocol, {1}, 0, Mode::Runoff};

    const auto base = tally(e, protocol);
    report.checks.push_back({"base-tally", base == std::vector<long long>{1, 3, 2, 0},
                             "nonmanipulator scores p,a,b,c = 1,3,2,0"});

    const Ballot gb = greedy_ballot(base, 0);
    bool greedy_ok = gb == Ballot{0, 3, 2, 1};
    const auto greedy_run = run_two_round(e, protocol, {{1, gb, std::nullopt}}, Mode::Runoff);
    greedy_ok = greedy_ok && greedy_run.initial_winners == std::vector<int>{0, 1} &&
                greedy_run.runoff_held &&
                !std::binary_search(greedy_run.overall_winners.begin(),
                                    greedy_run.overall_winners.end(), 0);
    report.checks.push_back({"greedy-fails", greedy_ok,
                             "greedy ballot p>c>b>a ties round one {p,a} and loses the runoff"});
    const auto forced = solve(inst, ThenSemantics::DecisiveStop, Strategy::Greedy);
    report.checks.push_back({"greedy-strategy-no", forced.verdict == Verdict::NotManipulable,
                             "forcing the greedy strategy reports no manipulation"});

    const Ballot better{0, 2, 3, 1};
    const auto better_run = run_two_round(e, protocol, {{1, better, std::nullopt}}, Mode::Runoff);
    const bool better_ok =
        better_run.initial_winners == std::vector<int>{0, 1, 2} && better_run.runoff_held &&
        std::binary_search(better_run.overall_winners.begin(), better_run.overall_winners.end(), 0);
    report.checks.push_back({"better-ballot", better_ok,
                             "ballot p>b>c>a reaches the runoff with {p,a,b} and p survives it"});

    auto ex = solve_exhaustive(inst);
    bool exh_ok = ex.verdict == Verdict::Manipulable && ex.certificate &&
                  ex.certificate->plans.size() == 1 &&
                  ex.certificate->plans[0].initial == Ballot{0, 2, 1, 3};
    if (ex.verdict == Verdict::Manipulable) exh_ok = recheck_yes(report, inst, *ex.certificate) && exh_ok;
    report.checks.push_back({"exhaustive-finds-it", exh_ok,
                             "exhaustive search proves it, certificate p>b>a>c re-verified"});
    return report;
}

SuiteReport suite_veto_sweep() {
    SuiteReport report;
    report.name = "veto-sweep";
    Rng rng(424242);

    // Seeded sample of cover instances with k <= 2, n <= 5, deduplicated as
    // multisets of triples.
    std::vector<X3CInstance> instances;
    std::set<std::pair<int, std::vector<std::array<int, 3>>>> seen;
    while (instances.size() < 60) {
        X3CInstance x;
        x.k = 1 + rng.below(2);
        const int n = 3 + rng.below(3);
        const auto pool = triple_pool(x.k);
        for (int i = 0; i < n; ++i) x.sets.push_back(pool[rng.below(static_cast<int>(pool.size()))]);
        auto key_sets = x.sets;
        std::sort(key_sets.begin(), key_sets.end());
        if (!seen.insert({x.k, key_sets}).second) continue;
        instances.push_back(std::move(x));
    }

    long long no_cover = 0, solver_runs = 0, mismatches = 0;
    long long covered = 0, cert_failures = 0, w1_failures = 0;
    for (const auto& x : instances) {
        const auto cover = x3c_oracle(x);
        if (!cover) ++no_cover;
        const auto construction = gen_veto_construction(x);

        std::vector<int> expected_w1;
        if (cover) {
            std::set<int> dropped{construction.z()};
            for (int i : *cover) dropped.insert(construction.s(i + 1));
            for (int c = 0; c < construction.election.num_candidates(); ++c) {
                if (!dropped.count(c)) expected_w1.push_back(c);
            }
        }

        for (Mode mode : {Mode::Runoff, Mode::RevotingRunoff}) {
            const auto instance = construction.instance(mode);
            const auto res = solve_exhaustive(instance);
            ++solver_runs;
            const bool manipulable = res.verdict == Verdict::Manipulable;
            if (manipulable != cover.has_value()) ++mismatches;
            if (manipulable && !recheck_yes(report, instance, *res.certificate)) ++mismatches;

            if (cover) {
                const auto cert = veto_cover_certificate(construction, *cover);
                ++report.yes_count;
                const auto check = verify_certificate(instance, cert);
                if (!check.success())
                    ++cert_failures;
                else {
                    ++report.yes_verified;
                    if (check.outcome->initial_winners != expected_w1) ++w1_failures;
                }
            }
        }
        if (cover) ++covered;
    }

    {
        std::ostringstream d;
        d << instances.size() << " seeded instances (" << no_cover << " without a cover), "
          << solver_runs << " canonicalized solver runs, " << mismatches << " disagreements with the oracle";
        report.checks.push_back({"sample-size",
                                 instances.size() >= 50 && no_cover >= 10,
                                 show_count(static_cast<long long>(instances.size()), "instance") +
                                     ", " + show_count(no_cover, "no-cover instance")});
        report.checks.push_back({"equivalence", mismatches == 0, d.str()});
    }
    {
        std::ostringstream d;
        d << covered << " covered instances; prescribed certificates valid in both runoff modes ("
          << cert_failures << " failures), initial winner sets exact (" << w1_failures << " off)";
        report.checks.push_back(
            {"forward-certificates", cert_failures == 0 && w1_failures == 0 && covered > 0, d.str()});
    }
    return report;
}

SuiteReport suite_halfapproval_forward() {
    SuiteReport report;
    report.name = "halfapproval-forward";
    Rng rng(20260815);

    long long built = 0, size_failures = 0, cert_failures = 0, w1_failures = 0;
    for (int n : {3, 4, 5}) {
        std::set<std::vector<std::array<int, 3>>> seen;
        int made = 0;
        while (made < 4) {
            // Plant a cover: shuffle the universe into two disjoint triples,
            // then pad with random distractors.
            std::vector<int> universe{1, 2, 3, 4, 5, 6};
            for (int i = 5; i > 0; --i) std::swap(universe[i], universe[rng.below(i + 1)]);
            X3CInstance x;
            x.k = 2;
            for (int t = 0; t < 2; ++t) {
                std::array<int, 3> tri{universe[3 * t], universe[3 * t + 1], universe[3 * t + 2]};
                std::sort(tri.begin(), tri.end());
                x.sets.push_back(tri);
            }
            const auto pool = triple_pool(2);
            while (static_cast<int>(x.sets.size()) < n)
                x.sets.push_back(pool[rng.below(static_cast<int>(pool.size()))]);
            auto key = x.sets;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            ++made;

            const auto cover = x3c_oracle(x);
            if (!cover) {
                ++cert_failures;  // planted cover must be found
                continue;
            }
            const auto construction = gen_halfapproval_construction(x);
            ++built;
            if (construction.election.num_candidates() != 2 * (n + 5 * 2 / 2 + 3)) ++size_failures;

            std::vector<int> expected_w1;
            std::set<int> dropped{construction.z()};
            for (int i : *cover) dropped.insert(construction.s(i + 1));
            for (int c = 0; c < construction.election.num_candidates(); ++c) {
                if (!dropped.count(c)) expected_w1.push_back(c);
            }

            const auto cert = halfapproval_cover_certificate(construction, *cover);
            for (Mode mode : {Mode::Runoff, Mode::RevotingRunoff}) {
                ++report.yes_count;
                const auto check = verify_certificate(construction.instance(mode), cert);
                if (!check.success())
                    ++cert_failures;
                else {
                    ++report.yes_verified;
                    if (check.outcome->initial_winners != expected_w1) ++w1_failures;
                }
            }
        }
    }

    std::ostringstream d;
    d << built << " covered instances (k=2, n in {3,4,5}), candidate counts exact ("
      << size_failures << " off), certificates valid in both runoff modes (" << cert_failures
      << " failures), initial winner sets exact (" << w1_failures << " off)";
    report.checks.push_back({"forward-direction",
                             built >= 10 && size_failures == 0 && cert_failures == 0 && w1_failures == 0,
                             d.str()});
    return report;
}

SuiteReport suite_plurality() {
    SuiteReport report;
    report.name = "plurality";
    Rng rng(20260815);
    long long comparisons = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + rng.below(4);
        const Election e = random_election(rng, m, 4, 5);
        const int k = 1 + rng.below(3);
        std::vector<long long> weights;
        for (int i = 0; i < k; ++i) weights.push_back(1 + rng.below(5));
        const int preferred = rng.below(m);
        for (Mode mode : {Mode::Single, Mode::Runoff, Mode::RevotingRunoff}) {
            const ManipulationInstance inst{e, ScoringProtocol::plurality(), weights, preferred, mode};
            const auto fast = solve_plurality_weighted(inst);
            const auto full = solve_exhaustive(inst);
            ++comparisons;
            if ((fast.verdict == Verdict::Manipulable) != (full.verdict == Verdict::Manipulable))
                ++mismatches;
            if (fast.verdict == Verdict::Manipulable && !recheck_yes(report, inst, *fast.certificate))
                ++mismatches;
            if (full.verdict == Verdict::Manipulable && !recheck_yes(report, inst, *full.certificate))
                ++mismatches;
        }
    }
    std::ostringstream d;
    d << "200 weighted elections x 3 modes (" << comparisons << " comparisons), fast path vs exhaustive, "
      << mismatches << " mismatches";
    report.checks.push_back({"fastpath-equivalence", comparisons >= 600 && mismatches == 0, d.str()});
    return report;
}

SuiteReport suite_bucket() {
    SuiteReport report;
    report.name = "bucket";
    Rng rng(20260816);
    long long comparisons = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + rng.below(3);
        const Election e = random_election(rng, m, 4, 1);
        const int k = rng.below(5);
        const std::vector<long long> weights(static_cast<size_t>(k), 1);
        const int preferred = rng.below(m);
        const auto protocol = cycle_builtin(trial);
        for (Mode mode : {Mode::Single, Mode::Runoff, Mode::RevotingRunoff}) {
            const ManipulationInstance inst{e, protocol, weights, preferred, mode};
            const auto bucket = solve_bucket(inst);
            const auto full = solve_exhaustive(inst);
            ++comparisons;
            if ((bucket.verdict == Verdict::Manipulable) != (full.verdict == Verdict::Manipulable))
                ++mismatches;
            if (bucket.verdict == Verdict::Manipulable &&
                !recheck_yes(report, inst, *bucket.certificate))
                ++mismatches;
            if (full.verdict == Verdict::Manipulable && !recheck_yes(report, inst, *full.certificate))
                ++mismatches;
        }
    }
    std::ostringstream d;
    d << "200 unweighted elections x 5 protocols x 3 modes (" << comparisons
      << " comparisons), bucket vs exhaustive, " << mismatches << " mismatches";
    report.checks.push_back({"bucket-equivalence", comparisons >= 600 && mismatches == 0, d.str()});
    return report;
}

SuiteReport suite_greedy_single() {
    SuiteReport report;
    report.name = "greedy-single";
    Rng rng(20260817);
    long long comparisons = 0, mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + rng.below(4);
        const Election e = random_election(rng, m, 4, 3);
        const std::vector<long long> weights{1 + rng.below(4)};
        const ManipulationInstance inst{e, cycle_protocol(trial), weights, rng.below(m), Mode::Single};
        const auto greedy = solve_single_round(inst);
        const auto full = solve_exhaustive(inst);
        ++comparisons;
        if ((greedy.verdict == Verdict::Manipulable) != (full.verdict == Verdict::Manipulable))
            ++mismatches;
        if (greedy.verdict == Verdict::Manipulable && !recheck_yes(report, inst, *greedy.certificate))
            ++mismatches;
        if (full.verdict == Verdict::Manipulable && !recheck_yes(report, inst, *full.certificate))
            ++mismatches;
    }
    std::ostringstream d;
    d << comparisons << " single-round one-manipulator elections, greedy vs exhaustive, " << mismatches
      << " mismatches";
    report.checks.push_back({"greedy-exactness", comparisons >= 500 && mismatches == 0, d.str()});
    return report;
}

SuiteReport suite_semantics() {
    SuiteReport report;
    report.name = "semantics";
    Rng rng(20260818);
    long long comparisons = 0, mismatches = 0, decisive_rounds = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + rng.below(4);
        const Election e = random_election(rng, m, 5, 3, 2);
        const auto protocol = cycle_protocol(trial);
        const auto stop = run_two_round(e, protocol, {}, Mode::Runoff, ThenSemantics::DecisiveStop);
        const auto always = run_two_round(e, protocol, {}, Mode::Runoff, ThenSemantics::OneWinnerRunoff);
        ++comparisons;
        if (stop.overall_winners != always.overall_winners ||
            stop.initial_winners != always.initial_winners)
            ++mismatches;
        if (stop.initial_winners.size() == 1) {
            ++decisive_rounds;
            if (stop.runoff_held || !always.runoff_held) ++mismatches;
        }
    }
    std::ostringstream d;
    d << comparisons << " elections across 6 protocols; decisive-stop and always-runoff winner sets "
      << "identical, " << mismatches << " mismatches (" << decisive_rounds
      << " decisive first rounds exercised both stopping rules)";
    report.checks.push_back({"semantics-coincidence", comparisons >= 500 && mismatches == 0, d.str()});
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "greedy-counterexample", "veto-sweep", "halfapproval-forward", "plurality",
        "bucket",                "greedy-single", "semantics"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    static const std::map<std::string, std::function<SuiteReport()>> table{
        {"greedy-counterexample", suite_greedy_counterexample},
        {"veto-sweep", suite_veto_sweep},
        {"halfapproval-forward", suite_halfapproval_forward},
        {"plurality", suite_plurality},
        {"bucket", suite_bucket},
        {"greedy-single", suite_greedy_single},
        {"semantics", suite_semantics},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    try {
        report = it->second();
    } catch (const std::exception& err) {
        report.name = name;
        report.checks.push_back({"exception", false, err.what()});
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.name << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : report.checks)
        out << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.label << " - " << c.detail << "\n";
    if (report.yes_count > 0)
        out << "  " << report.yes_verified << "/" << report.yes_count
            << " claimed successes re-verified from certificates\n";
    return out.str();
}

}  // namespace runoff
