#pragma once

#include <optional>
#include <string>
#include <vector>

#include "runoff/engine.hpp"

// Decision procedures and certificate producers for constructive coalition
// manipulation in all three modes. Every solver that answers "manipulable"
// re-verifies its own certificate before returning; a failed re-verification
// is an internal error and throws std::logic_error.

namespace runoff {

enum class Verdict { Manipulable, NotManipulable, Unknown };

struct SolveOptions {
    // Evaluated vote plans (initial profiles plus runoff probes) before the
    // exhaustive and bucket searches give up with Verdict::Unknown.
    long long node_budget = 10'000'000;
    // solve_bucket applies only up to this many candidates.
    int bucket_max_candidates = 5;
    // Veto searches normally run over (initial veto, runoff veto) pairs
    // instead of whole ballots; disable to force raw ballot enumeration.
    bool veto_canonicalization = true;
};

struct SolveResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;  // present iff Manipulable
    std::string solver_used;
    long long nodes_explored = 0;
};

enum class Strategy { Auto, Greedy, Exhaustive, Bucket, Fastpath };

// The greedy ballot against a fixed score table: the preferred candidate
// first, then the remaining candidates in ascending order of current score
// (so the largest remaining score values land on the weakest rivals),
// ties by ascending id. `scores` is indexed by candidate id.
Ballot greedy_ballot(const std::vector<long long>& scores, int preferred);

// The greedy ballot for an instance with exactly one manipulator (rejects
// zero or more than one).
Ballot greedy_single(const ManipulationInstance& instance);

// Single-round manipulation via greedy iteration: each manipulator in turn
// votes greedily against the running tally. Exact for at most one
// manipulator; with two or more, a greedy miss is reported as Unknown
// because greedy is not exact there.
SolveResult solve_single_round(const ManipulationInstance& instance,
                               const SolveOptions& options = {},
                               ThenSemantics semantics = ThenSemantics::DecisiveStop);

// Complete search over manipulator vote plans. Equal-weight manipulators are
// interchangeable, so profiles are enumerated as multisets. Runoff-mode
// second rounds are forced by restriction; RevotingRunoff second rounds are
// searched as fresh single-round manipulations over the survivors, cached per
// survivor set. For Veto the search runs over (initial veto, runoff veto)
// pairs unless options disable it; both routes are exact. Budget exhaustion
// yields Verdict::Unknown, never a false "not manipulable".
SolveResult solve_exhaustive(const ManipulationInstance& instance,
                             const SolveOptions& options = {},
                             ThenSemantics semantics = ThenSemantics::DecisiveStop);

// Fixed-candidate-count procedure for unweighted manipulators: enumerates
// weak compositions of the manipulator count over the m! ballot types per
// round. Independent of solve_exhaustive and exactly equivalent to it.
SolveResult solve_bucket(const ManipulationInstance& instance,
                         const SolveOptions& options = {},
                         ThenSemantics semantics = ThenSemantics::DecisiveStop);

// Weighted Plurality fast path: every manipulator votes the preferred
// candidate first (remaining candidates in id order) in both rounds;
// manipulable iff that one profile succeeds. Polynomial time, any mode.
SolveResult solve_plurality_weighted(const ManipulationInstance& instance,
                                     ThenSemantics semantics = ThenSemantics::DecisiveStop);

// Dispatcher. Auto picks: Plurality -> fastpath; Single mode with at most one
// manipulator -> greedy (exact there); Veto -> canonicalized exhaustive;
// unweighted elections within the bucket bound -> bucket; otherwise
// exhaustive. Forcing Strategy::Greedy outside Single mode evaluates the
// greedy two-round profile and reports its outcome; that path is knowingly
// non-exact (it is the documented demonstration of greedy failing with a
// runoff) and its "not manipulable" only means "greedy did not succeed".
SolveResult solve(const ManipulationInstance& instance,
                  ThenSemantics semantics = ThenSemantics::DecisiveStop,
                  Strategy strategy = Strategy::Auto,
                  const SolveOptions& options = {});

}  // namespace runoff
