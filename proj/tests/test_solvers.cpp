#include <doctest.h>

#include <random>
#include <stdexcept>

#include "runoff/solvers.hpp"

using namespace runoff;

namespace {

Election make_election(int m, std::vector<WeightedVote> votes) {
    Election e;
    for (int i = 0; i < m; ++i) e.candidates.push_back({i, "c" + std::to_string(i)});
    e.votes = std::move(votes);
    return e;
}

ManipulationInstance make_instance(Election e, ScoringProtocol proto,
                                   std::vector<long long> weights, int preferred, Mode mode) {
    ManipulationInstance inst;
    inst.nonmanipulators = std::move(e);
    inst.protocol = std::move(proto);
    inst.manipulator_weights = std::move(weights);
    inst.preferred = preferred;
    inst.mode = mode;
    return inst;
}

// Scores (2,1,0,0), nonmanipulators a>p>c>b and b>a>c>p, one manipulator,
// preferred p. Greedy tops the first round but loses the runoff; the ballot
// p>b>a>c wins outright.
ManipulationInstance counterexample(Mode mode = Mode::Runoff) {
    auto e = make_election(4, {{{1, 0, 3, 2}, 1, 1}, {{2, 1, 3, 0}, 1, 1}});
    return make_instance(std::move(e), ScoringProtocol::from_vector({2, 1, 0, 0}), {1}, 0, mode);
}

// Borda, four candidates, base scores 7/9/4/10: manipulable only by revoting.
ManipulationInstance revote_gap(Mode mode) {
    auto e = make_election(4, {
                                  {{1, 3, 0, 2}, 1, 1},
                                  {{0, 1, 3, 2}, 2, 1},
                                  {{3, 2, 1, 0}, 2, 1},
                              });
    return make_instance(std::move(e), ScoringProtocol::borda(), {1}, 0, mode);
}

Ballot random_ballot(std::mt19937& rng, int m) {
    Ballot b(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) b[c] = c;
    std::shuffle(b.begin(), b.end(), rng);
    return b;
}

}  // namespace

TEST_CASE("greedy_ballot sorts rivals by rising score, ties by id") {
    CHECK(greedy_ballot({5, 2, 2, 7}, 0) == Ballot{0, 1, 2, 3});
    CHECK(greedy_ballot({5, 2, 2, 7}, 2) == Ballot{2, 1, 0, 3});
    CHECK(greedy_ballot({0, 0, 0}, 1) == Ballot{1, 0, 2});
    CHECK_THROWS_AS(greedy_ballot({1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(greedy_ballot({1, 2}, -1), std::invalid_argument);
}

TEST_CASE("greedy_single wants exactly one manipulator") {
    auto inst = counterexample(Mode::Single);
    CHECK(greedy_single(inst) == Ballot{0, 3, 2, 1});

    inst.manipulator_weights = {};
    CHECK_THROWS_AS(greedy_single(inst), std::invalid_argument);
    inst.manipulator_weights = {1, 1};
    CHECK_THROWS_AS(greedy_single(inst), std::invalid_argument);
}

TEST_CASE("single-round greedy is exact for one manipulator") {
    auto win = make_instance(make_election(3, {{{0, 1, 2}, 1, 1}}), ScoringProtocol::borda(), {1},
                             0, Mode::Single);
    auto r = solve_single_round(win);
    CHECK(r.verdict == Verdict::Manipulable);
    CHECK(r.solver_used == "greedy");
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(win, *r.certificate).success());

    auto hopeless = make_instance(make_election(3, {{{1, 2, 0}, 100, 1}}),
                                  ScoringProtocol::borda(), {1}, 0, Mode::Single);
    CHECK(solve_single_round(hopeless).verdict == Verdict::NotManipulable);
}

TEST_CASE("single-round greedy reports an honest Unknown for coalitions") {
    auto inst = make_instance(make_election(3, {{{1, 2, 0}, 100, 1}}), ScoringProtocol::borda(),
                              {1, 1}, 0, Mode::Single);
    auto r = solve_single_round(inst);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.solver_used == "greedy");
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("solve_single_round rejects runoff modes") {
    CHECK_THROWS_AS(solve_single_round(counterexample(Mode::Runoff)), std::invalid_argument);
}

TEST_CASE("the greedy counterexample, end to end") {
    auto inst = counterexample();

    // forced greedy plays the two-round demo and misses
    auto greedy = solve(inst, ThenSemantics::DecisiveStop, Strategy::Greedy);
    CHECK(greedy.verdict == Verdict::NotManipulable);
    CHECK(greedy.solver_used == "greedy");

    // the complete search finds p>b>a>c on its third leaf
    auto full = solve_exhaustive(inst);
    CHECK(full.verdict == Verdict::Manipulable);
    CHECK(full.solver_used == "exhaustive");
    CHECK(full.nodes_explored == 3);
    REQUIRE(full.certificate.has_value());
    CHECK(full.certificate->plans[0].initial == Ballot{0, 2, 1, 3});
    CHECK(verify_certificate(inst, *full.certificate).success());

    // the bucket search agrees, leaf for leaf
    auto bucket = solve_bucket(inst);
    CHECK(bucket.verdict == Verdict::Manipulable);
    CHECK(bucket.nodes_explored == 3);
    REQUIRE(bucket.certificate.has_value());
    CHECK(bucket.certificate->plans[0].initial == Ballot{0, 2, 1, 3});

    // auto dispatch lands on the bucket for this unweighted 4-candidate job
    auto autod = solve(inst);
    CHECK(autod.solver_used == "bucket");
    CHECK(autod.verdict == Verdict::Manipulable);
}

TEST_CASE("forced greedy can still win a runoff") {
    auto inst = make_instance(make_election(3, {{{0, 1, 2}, 1, 1}}), ScoringProtocol::borda(), {1},
                              0, Mode::Runoff);
    auto r = solve(inst, ThenSemantics::DecisiveStop, Strategy::Greedy);
    CHECK(r.verdict == Verdict::Manipulable);
    CHECK(r.solver_used == "greedy");
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(inst, *r.certificate).success());
}

TEST_CASE("budget exhaustion is Unknown, never a false no") {
    auto inst = counterexample();
    SolveOptions tight;
    tight.node_budget = 1;

    auto r = solve_exhaustive(inst, tight);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK_FALSE(r.certificate.has_value());

    auto b = solve_bucket(inst, tight);
    CHECK(b.verdict == Verdict::Unknown);
}

TEST_CASE("bucket leaf count is the composition count") {
    // two unit manipulators over 3 candidates: C(7,5) = 21 ballot-type
    // multisets, all evaluated, none winning against a 100-weight wall
    auto inst = make_instance(make_election(3, {{{1, 2, 0}, 100, 1}}), ScoringProtocol::borda(),
                              {1, 1}, 0, Mode::Runoff);
    auto r = solve_bucket(inst);
    CHECK(r.verdict == Verdict::NotManipulable);
    CHECK(r.nodes_explored == 21);
    CHECK(r.solver_used == "bucket");
}

TEST_CASE("bucket preconditions") {
    auto weighted = make_instance(make_election(3, {{{0, 1, 2}, 1, 1}}), ScoringProtocol::borda(),
                                  {2}, 0, Mode::Runoff);
    CHECK_THROWS_AS(solve_bucket(weighted), std::invalid_argument);

    auto wide = make_instance(make_election(6, {{{0, 1, 2, 3, 4, 5}, 1, 1}}),
                              ScoringProtocol::borda(), {1}, 0, Mode::Runoff);
    CHECK_THROWS_AS(solve_bucket(wide), std::invalid_argument);
}

TEST_CASE("plurality fast path") {
    auto proto = ScoringProtocol::plurality();

    auto strong = make_instance(make_election(3, {{{1, 2, 0}, 2, 1}, {{2, 1, 0}, 2, 1}}), proto,
                                {3}, 0, Mode::Runoff);
    auto r = solve_plurality_weighted(strong);
    CHECK(r.verdict == Verdict::Manipulable);
    CHECK(r.solver_used == "fastpath");
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->plans[0].initial == Ballot{0, 1, 2});
    CHECK_FALSE(r.certificate->plans[0].runoff.has_value());  // no runoff happened

    auto weak = strong;
    weak.manipulator_weights = {1};
    CHECK(solve_plurality_weighted(weak).verdict == Verdict::NotManipulable);

    // one unit just forces a runoff; the certificate then carries the
    // restriction ballots explicitly
    auto tied = make_instance(make_election(3, {{{1, 0, 2}, 1, 1}}), proto, {1}, 0, Mode::Runoff);
    auto rt = solve_plurality_weighted(tied);
    CHECK(rt.verdict == Verdict::Manipulable);
    REQUIRE(rt.certificate.has_value());
    REQUIRE(rt.certificate->plans[0].runoff.has_value());
    CHECK(*rt.certificate->plans[0].runoff == Ballot{0, 1});
    CHECK(verify_certificate(tied, *rt.certificate).success());

    auto borda = make_instance(make_election(3, {{{0, 1, 2}, 1, 1}}), ScoringProtocol::borda(),
                               {1}, 0, Mode::Runoff);
    CHECK_THROWS_AS(solve_plurality_weighted(borda), std::invalid_argument);

    // and the dispatcher routes every plurality instance here
    CHECK(solve(strong).solver_used == "fastpath");
}

TEST_CASE("auto dispatch picks by instance shape") {
    auto single = counterexample(Mode::Single);
    CHECK(solve(single).solver_used == "greedy");

    auto veto = make_instance(make_election(3, {{{0, 1, 2}, 1, 1}}), ScoringProtocol::veto(), {1},
                              0, Mode::Runoff);
    CHECK(solve(veto).solver_used == "veto-canonical");

    auto weighted = make_instance(make_election(4, {{{1, 0, 3, 2}, 1, 1}}),
                                  ScoringProtocol::borda(), {2}, 0, Mode::Runoff);
    CHECK(solve(weighted).solver_used == "exhaustive");

    // unweighted pair in Single mode is out of greedy's exact range, so it
    // goes to the bucket instead
    auto pair = make_instance(make_election(3, {{{1, 2, 0}, 1, 1}}), ScoringProtocol::borda(),
                              {1, 1}, 0, Mode::Single);
    CHECK(solve(pair).solver_used == "bucket");
}

TEST_CASE("weighted certificates keep the instance's weight order") {
    auto inst = make_instance(make_election(3, {{{1, 2, 0}, 2, 1}}), ScoringProtocol::borda(),
                              {1, 3}, 0, Mode::Runoff);
    auto r = solve_exhaustive(inst);
    CHECK(r.verdict == Verdict::Manipulable);
    REQUIRE(r.certificate.has_value());
    REQUIRE(r.certificate->plans.size() == 2);
    CHECK(r.certificate->plans[0].weight == 1);
    CHECK(r.certificate->plans[1].weight == 3);
    CHECK(verify_certificate(inst, *r.certificate).success());
}

TEST_CASE("revoting can rescue what the forced restriction cannot") {
    auto runoff = solve(revote_gap(Mode::Runoff));
    CHECK(runoff.verdict == Verdict::NotManipulable);

    auto revote = solve(revote_gap(Mode::RevotingRunoff));
    CHECK(revote.verdict == Verdict::Manipulable);
    REQUIRE(revote.certificate.has_value());
    const auto& plan = revote.certificate->plans[0];
    CHECK(plan.initial == Ballot{0, 2, 1, 3});
    REQUIRE(plan.runoff.has_value());
    CHECK(*plan.runoff == Ballot{0, 3, 1});
    CHECK(verify_certificate(revote_gap(Mode::RevotingRunoff), *revote.certificate).success());

    // the raw search agrees with the bucket on both counts
    CHECK(solve_exhaustive(revote_gap(Mode::Runoff)).verdict == Verdict::NotManipulable);
    auto ex = solve_exhaustive(revote_gap(Mode::RevotingRunoff));
    CHECK(ex.verdict == Verdict::Manipulable);
}

TEST_CASE("veto pair canonicalization matches raw enumeration") {
    std::mt19937 rng(991);
    SolveOptions raw_opts;
    raw_opts.veto_canonicalization = false;

    int manipulable = 0;
    for (int iter = 0; iter < 25; ++iter) {
        Election e;
        for (int c = 0; c < 4; ++c) e.candidates.push_back({c, "c" + std::to_string(c)});
        const int nv = static_cast<int>(rng() % 4);
        for (int v = 0; v < nv; ++v)
            e.votes.push_back({random_ballot(rng, 4), static_cast<long long>(1 + rng() % 2), 1});
        std::vector<long long> weights;
        const int k = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) weights.push_back(static_cast<long long>(1 + rng() % 2));

        for (Mode mode : {Mode::Single, Mode::Runoff, Mode::RevotingRunoff}) {
            auto inst = make_instance(e, ScoringProtocol::veto(), weights,
                                      static_cast<int>(rng() % 4), mode);
            auto canon = solve_exhaustive(inst);
            auto raw = solve_exhaustive(inst, raw_opts);
            REQUIRE(canon.solver_used == "veto-canonical");
            REQUIRE(raw.solver_used == "exhaustive");
            CHECK(canon.verdict == raw.verdict);
            if (canon.verdict == Verdict::Manipulable) {
                ++manipulable;
                CHECK(verify_certificate(inst, *canon.certificate).success());
                CHECK(verify_certificate(inst, *raw.certificate).success());
            }
        }
    }
    CHECK(manipulable > 0);  // the sweep must exercise the success path
}
