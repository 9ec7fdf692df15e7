#pragma once

#include <optional>
#include <string>
#include <vector>

#include "runoff/core.hpp"

// Same-system runoff evaluation: if the initial round has two or more winners,
// a second election is held under the same protocol among exactly those
// winners, with all ballots restricted to them. Manipulators either keep their
// restricted ballots (Runoff) or may cast fresh ballots over the survivors
// (RevotingRunoff). Certificates are two-round vote plans for the
// manipulators, and verification distinguishes structural violations from
// plans that are well-formed but simply fail.

namespace runoff {

enum class Mode { Single, Runoff, RevotingRunoff };

// What happens when the initial round has a unique winner: DecisiveStop ends
// the election there (the default); OneWinnerRunoff still holds a one-candidate
// second round. The two coincide for scoring protocols.
enum class ThenSemantics { DecisiveStop, OneWinnerRunoff };

struct VotePlan {
    long long weight = 1;
    Ballot initial;                 // permutation of the full candidate set
    std::optional<Ballot> runoff;   // see verify_certificate for per-mode rules
};

// One plan per manipulator, aligned with the instance's weight list.
struct Certificate {
    std::vector<VotePlan> plans;
};

struct ManipulationInstance {
    Election nonmanipulators;
    ScoringProtocol protocol;
    std::vector<long long> manipulator_weights;  // may be empty (pure winner check)
    int preferred = 0;                           // the candidate to be made a winner
    Mode mode = Mode::Runoff;

    void validate() const;  // throws std::invalid_argument
};

struct TwoRoundResult {
    std::vector<int> initial_winners;  // ascending id
    bool runoff_held = false;
    std::vector<int> overall_winners;  // ascending id
};

// Evaluates the election given the manipulators' plans. Throws
// std::invalid_argument on structural violations it depends on (initial
// ballots not spanning the candidate set, a Runoff-mode runoff ballot that
// differs from the restriction, a RevotingRunoff ballot over the wrong set,
// any runoff ballot in Single mode).
TwoRoundResult run_two_round(const Election& nonmanipulators,
                             const ScoringProtocol& protocol,
                             const std::vector<VotePlan>& plans,
                             Mode mode,
                             ThenSemantics semantics = ThenSemantics::DecisiveStop);

struct VerifyResult {
    enum class Status { ValidSuccess, ValidFailure, Malformed };
    Status status = Status::Malformed;
    std::string reason;                   // set when Malformed
    std::optional<TwoRoundResult> outcome;  // set otherwise

    bool success() const { return status == Status::ValidSuccess; }
};

// Structural rules, checked before any outcome is reported:
//  - exactly one plan per manipulator, with matching weights;
//  - every initial ballot is a permutation of the candidate set;
//  - Single mode: no runoff ballots at all;
//  - no runoff ballot may be present when no runoff is held;
//  - Runoff mode: a present runoff ballot must equal the restriction of the
//    initial ballot to the realized runoff set (absent means "derived");
//  - RevotingRunoff: a present runoff ballot must be a permutation of the
//    realized runoff set (absent defaults to the restriction, itself a legal
//    fresh ballot).
VerifyResult verify_certificate(const ManipulationInstance& instance,
                                const Certificate& certificate,
                                ThenSemantics semantics = ThenSemantics::DecisiveStop);

}  // namespace runoff
