#include "runoff/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace runoff {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == '>' || c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
    }
    return true;
}

}  // namespace

int Election::candidate_by_name(const std::string& name) const {
    for (const auto& c : candidates) {
        if (c.name == name) return c.id;
    }
    return -1;
}

void Election::validate() const {
    const int m = num_candidates();
    if (m == 0) fail("election has no candidates");
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < m; ++i) {
        if (candidates[i].id != i) fail("candidate ids must be 0..m-1 in order");
        if (!valid_name(candidates[i].name))
            fail("candidate name '" + candidates[i].name + "' is empty or contains '>'/whitespace");
        if (!seen.emplace(candidates[i].name, i).second)
            fail("duplicate candidate name '" + candidates[i].name + "'");
    }
    std::vector<int> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = i;
    for (const auto& vote : votes) {
        if (vote.weight < 1) fail("vote weight must be >= 1");
        if (vote.count < 1) fail("vote count must be >= 1");
        if (!is_permutation_of(vote.ballot, ids))
            fail("ballot is not a permutation of the candidate set");
    }
}

ScoringProtocol ScoringProtocol::from_vector(std::vector<long long> v) {
    if (v.empty()) fail("score vector must be nonempty");
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) fail("score vector entries must be nonnegative");
        if (i > 0 && v[i] > v[i - 1]) fail("score vector must be nonincreasing");
    }
    return {ProtocolKind::ExplicitVector, std::move(v)};
}

std::vector<long long> ScoringProtocol::score_vector(int m) const {
    if (m < 1) fail("score_vector requires m >= 1");
    std::vector<long long> v(static_cast<size_t>(m), 0);
    switch (kind) {
        case ProtocolKind::Plurality:
            v[0] = 1;
            break;
        case ProtocolKind::Veto:
            std::fill(v.begin(), v.end(), 1);
            v[m - 1] = 0;
            break;
        case ProtocolKind::Borda:
            for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
            break;
        case ProtocolKind::HalfApproval:
            for (int i = 0; i < (m + 1) / 2; ++i) v[i] = 1;
            break;
        case ProtocolKind::Triviality:
            break;
        case ProtocolKind::ExplicitVector:
            if (static_cast<size_t>(m) > explicit_vector.size())
                fail("election larger than the explicit score vector's family");
            v.assign(explicit_vector.begin(), explicit_vector.begin() + m);
            break;
    }
    return v;
}

bool is_permutation_of(const Ballot& ballot, const std::vector<int>& ids) {
    if (ballot.size() != ids.size()) return false;
    Ballot sorted = ballot;
    std::sort(sorted.begin(), sorted.end());
    return sorted == ids;  // ids assumed sorted ascending
}

std::vector<long long> tally(const std::vector<int>& participants,
                             const std::vector<WeightedVote>& votes,
                             const ScoringProtocol& protocol) {
    const int m = static_cast<int>(participants.size());
    if (m == 0) fail("tally requires at least one candidate");
    if (!std::is_sorted(participants.begin(), participants.end()))
        fail("participant list must be sorted ascending");
    const auto vec = protocol.score_vector(m);
    // Dense position lookup indexed by candidate id.
    const int max_id = participants.back();
    std::vector<int> slot(static_cast<size_t>(max_id) + 1, -1);
    for (int i = 0; i < m; ++i) slot[participants[i]] = i;

    std::vector<long long> scores(static_cast<size_t>(m), 0);
    for (const auto& vote : votes) {
        if (!is_permutation_of(vote.ballot, participants))
            fail("ballot is not a permutation of the participant set");
        const long long w = vote.weight * vote.count;
        for (int pos = 0; pos < m; ++pos) scores[slot[vote.ballot[pos]]] += vec[pos] * w;
    }
    return scores;
}

std::vector<int> winners(const std::vector<int>& participants,
                         const std::vector<WeightedVote>& votes,
                         const ScoringProtocol& protocol) {
    const auto scores = tally(participants, votes, protocol);
    const long long best = *std::max_element(scores.begin(), scores.end());
    std::vector<int> out;
    for (size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] == best) out.push_back(participants[i]);
    }
    return out;
}

std::vector<long long> tally(const Election& election, const ScoringProtocol& protocol) {
    std::vector<int> ids(static_cast<size_t>(election.num_candidates()));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return tally(ids, election.votes, protocol);
}

std::vector<int> winners(const Election& election, const ScoringProtocol& protocol) {
    std::vector<int> ids(static_cast<size_t>(election.num_candidates()));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return winners(ids, election.votes, protocol);
}

Ballot restrict_ballot(const Ballot& ballot, const std::vector<int>& survivors) {
    if (survivors.empty()) fail("cannot restrict a ballot to an empty survivor set");
    std::vector<char> keep;
    int max_id = 0;
    for (int s : survivors) max_id = std::max(max_id, s);
    keep.assign(static_cast<size_t>(max_id) + 1, 0);
    for (int s : survivors) keep[s] = 1;
    Ballot out;
    out.reserve(survivors.size());
    for (int c : ballot) {
        if (c <= max_id && keep[c]) out.push_back(c);
    }
    if (out.size() != survivors.size()) fail("survivor set is not a subset of the ballot");
    return out;
}

}  // namespace runoff
