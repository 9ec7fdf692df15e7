#include "runoff/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace runoff {

namespace {

std::vector<int> all_ids(const Election& e) {
    std::vector<int> ids(static_cast<size_t>(e.num_candidates()));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return ids;
}

std::vector<WeightedVote> with_initial_plans(const Election& nonmanip,
                                             const std::vector<VotePlan>& plans) {
    std::vector<WeightedVote> votes = nonmanip.votes;
    votes.reserve(votes.size() + plans.size());
    for (const auto& plan : plans) votes.push_back({plan.initial, plan.weight, 1});
    return votes;
}

std::vector<WeightedVote> restricted_votes(const std::vector<WeightedVote>& votes,
                                           const std::vector<int>& survivors) {
    std::vector<WeightedVote> out;
    out.reserve(votes.size());
    for (const auto& v : votes) out.push_back({restrict_ballot(v.ballot, survivors), v.weight, v.count});
    return out;
}

}  // namespace

void ManipulationInstance::validate() const {
    nonmanipulators.validate();
    if (preferred < 0 || preferred >= nonmanipulators.num_candidates())
        throw std::invalid_argument("preferred candidate id out of range");
    for (long long w : manipulator_weights) {
        if (w < 1) throw std::invalid_argument("manipulator weights must be >= 1");
    }
    // Reject protocols undefined for this candidate count up front.
    protocol.score_vector(nonmanipulators.num_candidates());
}

TwoRoundResult run_two_round(const Election& nonmanipulators,
                             const ScoringProtocol& protocol,
                             const std::vector<VotePlan>& plans,
                             Mode mode,
                             ThenSemantics semantics) {
    const auto ids = all_ids(nonmanipulators);
    for (const auto& plan : plans) {
        if (!is_permutation_of(plan.initial, ids))
            throw std::invalid_argument("initial ballot is not a permutation of the candidate set");
        if (mode == Mode::Single && plan.runoff.has_value())
            throw std::invalid_argument("runoff ballot supplied in Single mode");
    }

    const auto votes1 = with_initial_plans(nonmanipulators, plans);
    TwoRoundResult result;
    result.initial_winners = winners(ids, votes1, protocol);

    if (mode == Mode::Single ||
        (result.initial_winners.size() == 1 && semantics == ThenSemantics::DecisiveStop)) {
        result.overall_winners = result.initial_winners;
        result.runoff_held = false;
        return result;
    }

    const auto& survivors = result.initial_winners;
    auto votes2 = restricted_votes(nonmanipulators.votes, survivors);
    for (const auto& plan : plans) {
        Ballot rb = restrict_ballot(plan.initial, survivors);
        if (mode == Mode::Runoff) {
            if (plan.runoff.has_value() && *plan.runoff != rb)
                throw std::invalid_argument("runoff ballot differs from the restriction");
        } else {  // RevotingRunoff: fresh ballot over the survivors, default = restriction
            if (plan.runoff.has_value()) {
                if (!is_permutation_of(*plan.runoff, survivors))
                    throw std::invalid_argument("runoff ballot is not over the runoff candidate set");
                rb = *plan.runoff;
            }
        }
        votes2.push_back({std::move(rb), plan.weight, 1});
    }
    result.runoff_held = true;
    result.overall_winners = winners(survivors, votes2, protocol);
    return result;
}

VerifyResult verify_certificate(const ManipulationInstance& instance,
                                const Certificate& certificate,
                                ThenSemantics semantics) {
    VerifyResult out;
    auto malformed = [&out](const std::string& why) {
        out.status = VerifyResult::Status::Malformed;
        out.reason = why;
        return out;
    };

    const auto& plans = certificate.plans;
    if (plans.size() != instance.manipulator_weights.size())
        return malformed("certificate has " + std::to_string(plans.size()) + " plans for " +
                         std::to_string(instance.manipulator_weights.size()) + " manipulators");
    for (size_t i = 0; i < plans.size(); ++i) {
        if (plans[i].weight != instance.manipulator_weights[i])
            return malformed("plan " + std::to_string(i) + " weight differs from the manipulator's");
    }

    const auto ids = all_ids(instance.nonmanipulators);
    for (size_t i = 0; i < plans.size(); ++i) {
        if (!is_permutation_of(plans[i].initial, ids))
            return malformed("plan " + std::to_string(i) +
                             " initial ballot is not a permutation of the candidate set");
        if (instance.mode == Mode::Single && plans[i].runoff.has_value())
            return malformed("plan " + std::to_string(i) + " carries a runoff ballot in Single mode");
    }

    const auto votes1 = with_initial_plans(instance.nonmanipulators, plans);
    TwoRoundResult result;
    result.initial_winners = winners(ids, votes1, instance.protocol);

    const bool runoff_happens =
        instance.mode != Mode::Single &&
        !(result.initial_winners.size() == 1 && semantics == ThenSemantics::DecisiveStop);

    if (!runoff_happens) {
        for (size_t i = 0; i < plans.size(); ++i) {
            if (plans[i].runoff.has_value())
                return malformed("plan " + std::to_string(i) +
                                 " carries a runoff ballot but no runoff was held");
        }
        result.runoff_held = false;
        result.overall_winners = result.initial_winners;
    } else {
        const auto& survivors = result.initial_winners;
        auto votes2 = restricted_votes(instance.nonmanipulators.votes, survivors);
        for (size_t i = 0; i < plans.size(); ++i) {
            Ballot rb = restrict_ballot(plans[i].initial, survivors);
            if (plans[i].runoff.has_value()) {
                if (instance.mode == Mode::Runoff) {
                    if (*plans[i].runoff != rb)
                        return malformed("plan " + std::to_string(i) +
                                         " runoff ballot differs from the restriction");
                } else {
                    if (!is_permutation_of(*plans[i].runoff, survivors))
                        return malformed("plan " + std::to_string(i) +
                                         " runoff ballot is not over the runoff candidate set");
                    rb = *plans[i].runoff;
                }
            }
            votes2.push_back({std::move(rb), plans[i].weight, 1});
        }
        result.runoff_held = true;
        result.overall_winners = winners(survivors, votes2, instance.protocol);
    }

    const bool won = std::binary_search(result.overall_winners.begin(),
                                        result.overall_winners.end(), instance.preferred);
    out.status = won ? VerifyResult::Status::ValidSuccess : VerifyResult::Status::ValidFailure;
    out.outcome = std::move(result);
    return out;
}

}  // namespace runoff
