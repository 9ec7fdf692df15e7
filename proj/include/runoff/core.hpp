#pragma once

#include <string>
#include <vector>

// Ballots, weighted vote collections, scoring-protocol families, and
// single-round winner determination. Everything is an immutable value;
// all operations are pure functions and throw std::invalid_argument on
// precondition violations.

namespace runoff {

// Candidate ids, most-preferred first. A well-formed ballot is a permutation
// of the candidate set it is cast over (no ties, omissions, or repeats).
using Ballot = std::vector<int>;

struct Candidate {
    int id = 0;
    std::string name;
};

struct WeightedVote {
    Ballot ballot;
    long long weight = 1;  // >= 1
    long long count = 1;   // >= 1 identical anonymous voters
};

struct Election {
    std::vector<Candidate> candidates;  // candidates[i].id == i
    std::vector<WeightedVote> votes;

    int num_candidates() const { return static_cast<int>(candidates.size()); }
    // -1 when no candidate carries that name.
    int candidate_by_name(const std::string& name) const;
    // Throws std::invalid_argument describing the first violation found:
    // duplicate/empty/ill-formed names, non-permutation ballots,
    // nonpositive weights or counts.
    void validate() const;
};

enum class ProtocolKind { Plurality, Veto, Borda, HalfApproval, Triviality, ExplicitVector };

// A scoring protocol assigns a nonincreasing score vector to ballot positions
// for each candidate count m. An explicit vector given for M candidates acts
// as a family: smaller elections use its length-m prefix, larger ones are
// rejected.
struct ScoringProtocol {
    ProtocolKind kind = ProtocolKind::Plurality;
    std::vector<long long> explicit_vector;  // ExplicitVector only

    static ScoringProtocol plurality() { return {ProtocolKind::Plurality, {}}; }
    static ScoringProtocol veto() { return {ProtocolKind::Veto, {}}; }
    static ScoringProtocol borda() { return {ProtocolKind::Borda, {}}; }
    static ScoringProtocol half_approval() { return {ProtocolKind::HalfApproval, {}}; }
    static ScoringProtocol triviality() { return {ProtocolKind::Triviality, {}}; }
    // Validates: nonempty, nonnegative, nonincreasing.
    static ScoringProtocol from_vector(std::vector<long long> v);

    std::vector<long long> score_vector(int m) const;
};

// Scores aligned with `participants` (which must be sorted ascending); every
// ballot must be a permutation of `participants`.
std::vector<long long> tally(const std::vector<int>& participants,
                             const std::vector<WeightedVote>& votes,
                             const ScoringProtocol& protocol);
// All candidates attaining the maximum score, ascending id. Nonempty whenever
// `participants` is (zero votes mean everyone ties at 0).
std::vector<int> winners(const std::vector<int>& participants,
                         const std::vector<WeightedVote>& votes,
                         const ScoringProtocol& protocol);

std::vector<long long> tally(const Election& election, const ScoringProtocol& protocol);
std::vector<int> winners(const Election& election, const ScoringProtocol& protocol);

// Order-preserving restriction of a ballot to a nonempty survivor set; every
// survivor must appear on the ballot.
Ballot restrict_ballot(const Ballot& ballot, const std::vector<int>& survivors);

bool is_permutation_of(const Ballot& ballot, const std::vector<int>& ids);

}  // namespace runoff
