#include "runoff/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace runoff {

namespace {

std::vector<int> all_ids(const Election& e) {
    std::vector<int> ids(static_cast<size_t>(e.num_candidates()));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

std::vector<Ballot> all_ballots(const std::vector<int>& ids) {
    Ballot b = ids;
    std::vector<Ballot> out;
    do {
        out.push_back(b);
    } while (std::next_permutation(b.begin(), b.end()));
    return out;
}

bool contains(const std::vector<int>& sorted_ids, int c) {
    return std::binary_search(sorted_ids.begin(), sorted_ids.end(), c);
}

std::vector<int> arg_max(const std::vector<int>& participants, const std::vector<long long>& scores) {
    const long long best = *std::max_element(scores.begin(), scores.end());
    std::vector<int> out;
    for (size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] == best) out.push_back(participants[i]);
    }
    return out;
}

// Manipulator slots sorted by weight (descending, stable) so equal weights are
// contiguous and multiset enumeration can require nondecreasing choices within
// a run. `order[slot]` is the original manipulator index.
struct Slots {
    std::vector<int> order;
    std::vector<long long> weight;
    size_t size() const { return order.size(); }
};

Slots make_slots(const std::vector<long long>& weights) {
    Slots s;
    s.order.resize(weights.size());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return weights[a] > weights[b]; });
    s.weight.reserve(weights.size());
    for (int i : s.order) s.weight.push_back(weights[i]);
    return s;
}

struct Budget {
    long long used = 0;
    long long limit = 0;
    bool exceeded = false;
    bool tick() {
        if (++used > limit) exceeded = true;
        return !exceeded;
    }
};

// Scores over `participants` for the restricted nonmanipulator votes plus the
// given per-slot runoff ballots.
struct RoundTwoBase {
    std::vector<int> participants;   // sorted
    std::vector<long long> scores;   // nonmanipulators only, restricted
    std::vector<long long> vec;      // score vector at |participants|
    std::vector<int> slot_of;        // candidate id -> index, dense
};

RoundTwoBase round_two_base(const Election& nonmanip, const ScoringProtocol& protocol,
                            const std::vector<int>& survivors) {
    RoundTwoBase base;
    base.participants = survivors;
    std::vector<WeightedVote> votes;
    votes.reserve(nonmanip.votes.size());
    for (const auto& v : nonmanip.votes)
        votes.push_back({restrict_ballot(v.ballot, survivors), v.weight, v.count});
    base.scores = tally(survivors, votes, protocol);
    base.vec = protocol.score_vector(static_cast<int>(survivors.size()));
    base.slot_of.assign(static_cast<size_t>(survivors.back()) + 1, -1);
    for (size_t i = 0; i < survivors.size(); ++i) base.slot_of[survivors[i]] = static_cast<int>(i);
    return base;
}

SolveResult finish_manipulable(const ManipulationInstance& inst, ThenSemantics semantics,
                               Certificate cert, const std::string& tag, long long nodes) {
    const auto check = verify_certificate(inst, cert, semantics);
    if (!check.success())
        throw std::logic_error("solver '" + tag + "' produced a certificate that failed verification: " +
                               check.reason);
    SolveResult r;
    r.verdict = Verdict::Manipulable;
    r.certificate = std::move(cert);
    r.solver_used = tag;
    r.nodes_explored = nodes;
    return r;
}

SolveResult finish_plain(Verdict v, const std::string& tag, long long nodes) {
    SolveResult r;
    r.verdict = v;
    r.solver_used = tag;
    r.nodes_explored = nodes;
    return r;
}

// ---------------------------------------------------------------------------
// Raw exhaustive search
// ---------------------------------------------------------------------------

struct RawSearch {
    const ManipulationInstance& inst;
    ThenSemantics semantics;
    std::vector<int> ids;
    std::vector<long long> base;       // nonmanipulator tally
    std::vector<long long> vec;        // score vector at m
    Slots slots;
    Budget budget;
    // Survivor set -> per-slot runoff ballots of a success, or nullopt.
    std::map<std::vector<int>, std::optional<std::vector<Ballot>>> revote_memo;

    // Per-slot ballots of the plan under evaluation. Ballots are enumerated
    // lazily in lex order; materializing all m! of them up front would blow
    // the heap long before the node budget could call a halt.
    std::vector<Ballot> current;
    Certificate found;

    explicit RawSearch(const ManipulationInstance& i, const SolveOptions& opt, ThenSemantics sem)
        : inst(i), semantics(sem), ids(all_ids(i.nonmanipulators)) {
        base = tally(inst.nonmanipulators, inst.protocol);
        vec = inst.protocol.score_vector(static_cast<int>(ids.size()));
        slots = make_slots(inst.manipulator_weights);
        budget.limit = opt.node_budget;
        current.assign(slots.size(), ids);
    }

    Certificate make_certificate(const std::vector<Ballot>& initials,
                                 const std::vector<std::optional<Ballot>>& runoffs) {
        Certificate cert;
        cert.plans.resize(slots.size());
        for (size_t s = 0; s < slots.size(); ++s) {
            auto& plan = cert.plans[slots.order[s]];
            plan.weight = slots.weight[s];
            plan.initial = initials[s];
            plan.runoff = runoffs[s];
        }
        return cert;
    }

    // 0 = keep searching, 1 = success (found filled), 2 = budget exceeded
    int evaluate() {
        if (!budget.tick()) return 2;
        auto scores = base;
        for (size_t s = 0; s < slots.size(); ++s) {
            const auto& b = current[s];
            for (size_t pos = 0; pos < b.size(); ++pos) scores[b[pos]] += vec[pos] * slots.weight[s];
        }
        const auto w1 = arg_max(ids, scores);
        if (!contains(w1, inst.preferred)) return 0;

        std::vector<Ballot> initials = current;
        std::vector<std::optional<Ballot>> runoffs(slots.size());

        const bool runoff_happens =
            inst.mode != Mode::Single &&
            !(w1.size() == 1 && semantics == ThenSemantics::DecisiveStop);
        if (inst.mode == Mode::Single || !runoff_happens || w1.size() == 1) {
            // p is the sole initial winner (or Single mode succeeded outright);
            // a held one-candidate runoff is won by p trivially.
            found = make_certificate(initials, runoffs);
            return 1;
        }

        if (inst.mode == Mode::Runoff) {
            auto rt = round_two_base(inst.nonmanipulators, inst.protocol, w1);
            for (size_t s = 0; s < slots.size(); ++s) {
                const Ballot rb = restrict_ballot(initials[s], w1);
                for (size_t pos = 0; pos < rb.size(); ++pos)
                    rt.scores[rt.slot_of[rb[pos]]] += rt.vec[pos] * slots.weight[s];
            }
            const auto w2 = arg_max(rt.participants, rt.scores);
            if (!contains(w2, inst.preferred)) return 0;
            for (size_t s = 0; s < slots.size(); ++s) runoffs[s] = restrict_ballot(initials[s], w1);
            found = make_certificate(initials, runoffs);
            return 1;
        }

        // RevotingRunoff: whether a second round over w1 can be won depends
        // only on w1, so cache the answer per survivor set.
        auto it = revote_memo.find(w1);
        if (it == revote_memo.end()) {
            auto solved = solve_revote_round(w1);
            if (budget.exceeded) return 2;
            it = revote_memo.emplace(w1, std::move(solved)).first;
        }
        if (!it->second.has_value()) return 0;
        for (size_t s = 0; s < slots.size(); ++s) runoffs[s] = (*it->second)[s];
        found = make_certificate(initials, runoffs);
        return 1;
    }

    std::optional<std::vector<Ballot>> solve_revote_round(const std::vector<int>& survivors) {
        const auto base2 = round_two_base(inst.nonmanipulators, inst.protocol, survivors);
        std::vector<Ballot> cur(slots.size());
        std::optional<std::vector<Ballot>> result;
        auto rec = [&](auto&& self, size_t slot) -> int {
            if (slot == slots.size()) {
                if (!budget.tick()) return 2;
                auto scores = base2.scores;
                for (size_t s = 0; s < slots.size(); ++s) {
                    const auto& b = cur[s];
                    for (size_t pos = 0; pos < b.size(); ++pos)
                        scores[base2.slot_of[b[pos]]] += base2.vec[pos] * slots.weight[s];
                }
                const auto w2 = arg_max(base2.participants, scores);
                if (!contains(w2, inst.preferred)) return 0;
                result = cur;
                return 1;
            }
            // Lex order makes "no earlier than the previous equal-weight
            // slot" the same symmetry break as index comparison would be.
            Ballot& b = cur[slot];
            b = (slot > 0 && slots.weight[slot] == slots.weight[slot - 1]) ? cur[slot - 1]
                                                                           : survivors;
            while (true) {
                if (int r = self(self, slot + 1)) return r;
                if (!std::next_permutation(b.begin(), b.end())) return 0;
            }
        };
        rec(rec, 0);
        return result;
    }

    SolveResult run(const std::string& tag) {
        int outcome = 0;
        auto rec = [&](auto&& self, size_t slot) -> int {
            if (slot == slots.size()) return evaluate();
            Ballot& b = current[slot];
            b = (slot > 0 && slots.weight[slot] == slots.weight[slot - 1]) ? current[slot - 1]
                                                                           : ids;
            while (true) {
                if (int r = self(self, slot + 1)) return r;
                if (!std::next_permutation(b.begin(), b.end())) return 0;
            }
        };
        outcome = rec(rec, 0);
        if (outcome == 2) return finish_plain(Verdict::Unknown, tag, budget.used);
        if (outcome == 1) return finish_manipulable(inst, semantics, std::move(found), tag, budget.used);
        return finish_plain(Verdict::NotManipulable, tag, budget.used);
    }
};

// ---------------------------------------------------------------------------
// Canonicalized Veto search
// ---------------------------------------------------------------------------
//
// Under Veto only a ballot's last candidate matters per round, so a plan is
// characterized by (initial veto v, runoff veto u). Any pair is realizable:
// the ballot [others ascending] ++ [u, v] vetoes v initially and, once v has
// left, u in the runoff. If v survives to the runoff, Runoff mode forces the
// restricted ballot to keep vetoing v; RevotingRunoff frees u entirely.

struct VetoSearch {
    const ManipulationInstance& inst;
    ThenSemantics semantics;
    std::vector<int> ids;
    std::vector<long long> base;
    Slots slots;
    Budget budget;

    std::vector<int> veto1;  // per-slot initial veto target
    Certificate found;

    explicit VetoSearch(const ManipulationInstance& i, const SolveOptions& opt, ThenSemantics sem)
        : inst(i), semantics(sem), ids(all_ids(i.nonmanipulators)) {
        base = tally(inst.nonmanipulators, inst.protocol);
        slots = make_slots(inst.manipulator_weights);
        budget.limit = opt.node_budget;
        veto1.assign(slots.size(), 0);
    }

    Ballot ballot_with_tail(const std::vector<int>& universe, std::initializer_list<int> tail) {
        Ballot b;
        b.reserve(universe.size());
        for (int c : universe) {
            if (std::find(tail.begin(), tail.end(), c) == tail.end()) b.push_back(c);
        }
        b.insert(b.end(), tail.begin(), tail.end());
        return b;
    }

    Certificate make_certificate(const std::vector<int>& survivors, bool runoff_held,
                                 const std::vector<int>& veto2) {
        Certificate cert;
        cert.plans.resize(slots.size());
        for (size_t s = 0; s < slots.size(); ++s) {
            auto& plan = cert.plans[slots.order[s]];
            plan.weight = slots.weight[s];
            const int v = veto1[s];
            if (!runoff_held) {
                plan.initial = ballot_with_tail(ids, {v});
                continue;
            }
            const int u = veto2[s];
            if (inst.mode == Mode::Runoff) {
                plan.initial = (u == v) ? ballot_with_tail(ids, {v}) : ballot_with_tail(ids, {u, v});
                plan.runoff = restrict_ballot(plan.initial, survivors);
            } else {
                plan.initial = ballot_with_tail(ids, {v});
                plan.runoff = ballot_with_tail(survivors, {u});
            }
        }
        return cert;
    }

    // Same return convention as RawSearch::evaluate.
    int evaluate() {
        if (!budget.tick()) return 2;
        auto scores = base;
        for (size_t s = 0; s < slots.size(); ++s) {
            for (int c : ids) {
                if (c != veto1[s]) scores[c] += slots.weight[s];
            }
        }
        const auto w1 = arg_max(ids, scores);
        if (!contains(w1, inst.preferred)) return 0;

        const bool runoff_happens =
            inst.mode != Mode::Single &&
            !(w1.size() == 1 && semantics == ThenSemantics::DecisiveStop);
        if (inst.mode == Mode::Single || !runoff_happens || w1.size() == 1) {
            found = make_certificate(w1, false, {});
            return 1;
        }

        // Round-two veto scores: every vote awards 1 to each survivor except
        // the deepest survivor on its ballot.
        auto rt = round_two_base(inst.nonmanipulators, inst.protocol, w1);
        std::set<int> w1set(w1.begin(), w1.end());

        // Per-slot runoff veto choices.
        std::vector<std::vector<int>> choices(slots.size());
        for (size_t s = 0; s < slots.size(); ++s) {
            if (inst.mode == Mode::Runoff && w1set.count(veto1[s]))
                choices[s] = {veto1[s]};
            else
                choices[s] = w1;
        }

        std::vector<int> veto2(slots.size(), 0);
        std::set<std::vector<std::pair<long long, int>>> seen;
        int outcome = 0;
        auto rec = [&](auto&& self, size_t slot) -> int {
            if (slot == slots.size()) {
                std::vector<std::pair<long long, int>> key(slots.size());
                for (size_t s = 0; s < slots.size(); ++s) key[s] = {slots.weight[s], veto2[s]};
                std::sort(key.begin(), key.end());
                if (!seen.insert(std::move(key)).second) return 0;
                if (!budget.tick()) return 2;
                auto scores2 = rt.scores;
                for (size_t s = 0; s < slots.size(); ++s) {
                    for (int c : rt.participants) {
                        if (c != veto2[s]) scores2[rt.slot_of[c]] += slots.weight[s];
                    }
                }
                const auto w2 = arg_max(rt.participants, scores2);
                if (!contains(w2, inst.preferred)) return 0;
                found = make_certificate(w1, true, veto2);
                return 1;
            }
            for (int u : choices[slot]) {
                veto2[slot] = u;
                if (int r = self(self, slot + 1)) return r;
            }
            return 0;
        };
        outcome = rec(rec, 0);
        return outcome;
    }

    SolveResult run(const std::string& tag) {
        auto rec = [&](auto&& self, size_t slot) -> int {
            if (slot == slots.size()) return evaluate();
            const int start =
                (slot > 0 && slots.weight[slot] == slots.weight[slot - 1]) ? veto1[slot - 1] : 0;
            for (int v = start; v < static_cast<int>(ids.size()); ++v) {
                veto1[slot] = v;
                if (int r = self(self, slot + 1)) return r;
            }
            return 0;
        };
        const int outcome = rec(rec, 0);
        if (outcome == 2) return finish_plain(Verdict::Unknown, tag, budget.used);
        if (outcome == 1) return finish_manipulable(inst, semantics, std::move(found), tag, budget.used);
        return finish_plain(Verdict::NotManipulable, tag, budget.used);
    }
};

// ---------------------------------------------------------------------------
// Bucket search (weak compositions over ballot types, unweighted)
// ---------------------------------------------------------------------------

struct BucketSearch {
    const ManipulationInstance& inst;
    ThenSemantics semantics;
    std::vector<int> ids;
    std::vector<Ballot> types;
    std::vector<long long> base;
    std::vector<long long> vec;
    int k;
    Budget budget;
    std::map<std::vector<int>, std::optional<std::vector<Ballot>>> revote_memo;

    std::vector<int> counts;
    Certificate found;

    explicit BucketSearch(const ManipulationInstance& i, const SolveOptions& opt, ThenSemantics sem)
        : inst(i), semantics(sem), ids(all_ids(i.nonmanipulators)) {
        types = all_ballots(ids);
        base = tally(inst.nonmanipulators, inst.protocol);
        vec = inst.protocol.score_vector(static_cast<int>(ids.size()));
        k = static_cast<int>(inst.manipulator_weights.size());
        budget.limit = opt.node_budget;
        counts.assign(types.size(), 0);
    }

    // Expands a per-type count vector into one ballot per manipulator, in
    // type order.
    static std::vector<Ballot> expand(const std::vector<int>& counts, const std::vector<Ballot>& types) {
        std::vector<Ballot> out;
        for (size_t t = 0; t < counts.size(); ++t) {
            for (int c = 0; c < counts[t]; ++c) out.push_back(types[t]);
        }
        return out;
    }

    Certificate make_certificate(const std::vector<Ballot>& initials,
                                 const std::vector<std::optional<Ballot>>& runoffs) {
        Certificate cert;
        cert.plans.resize(initials.size());
        for (size_t i = 0; i < initials.size(); ++i) {
            cert.plans[i] = {1, initials[i], runoffs[i]};
        }
        return cert;
    }

    int evaluate() {
        if (!budget.tick()) return 2;
        auto scores = base;
        for (size_t t = 0; t < types.size(); ++t) {
            if (!counts[t]) continue;
            for (size_t pos = 0; pos < types[t].size(); ++pos)
                scores[types[t][pos]] += vec[pos] * counts[t];
        }
        const auto w1 = arg_max(ids, scores);
        if (!contains(w1, inst.preferred)) return 0;

        const auto initials = expand(counts, types);
        std::vector<std::optional<Ballot>> runoffs(initials.size());

        const bool runoff_happens =
            inst.mode != Mode::Single &&
            !(w1.size() == 1 && semantics == ThenSemantics::DecisiveStop);
        if (inst.mode == Mode::Single || !runoff_happens || w1.size() == 1) {
            found = make_certificate(initials, runoffs);
            return 1;
        }

        if (inst.mode == Mode::Runoff) {
            auto rt = round_two_base(inst.nonmanipulators, inst.protocol, w1);
            for (const auto& b : initials) {
                const Ballot rb = restrict_ballot(b, w1);
                for (size_t pos = 0; pos < rb.size(); ++pos) rt.scores[rt.slot_of[rb[pos]]] += rt.vec[pos];
            }
            const auto w2 = arg_max(rt.participants, rt.scores);
            if (!contains(w2, inst.preferred)) return 0;
            for (size_t i = 0; i < initials.size(); ++i) runoffs[i] = restrict_ballot(initials[i], w1);
            found = make_certificate(initials, runoffs);
            return 1;
        }

        auto it = revote_memo.find(w1);
        if (it == revote_memo.end()) {
            auto solved = solve_revote_round(w1);
            if (budget.exceeded) return 2;
            it = revote_memo.emplace(w1, std::move(solved)).first;
        }
        if (!it->second.has_value()) return 0;
        for (size_t i = 0; i < initials.size(); ++i) runoffs[i] = (*it->second)[i];
        found = make_certificate(initials, runoffs);
        return 1;
    }

    std::optional<std::vector<Ballot>> solve_revote_round(const std::vector<int>& survivors) {
        const auto base2 = round_two_base(inst.nonmanipulators, inst.protocol, survivors);
        const auto sub = all_ballots(survivors);
        std::vector<int> sub_counts(sub.size(), 0);
        std::optional<std::vector<Ballot>> result;
        auto rec = [&](auto&& self, size_t t, int remaining) -> int {
            if (t + 1 == sub_counts.size()) {
                sub_counts[t] = remaining;
                if (!budget.tick()) return 2;
                auto scores = base2.scores;
                for (size_t i = 0; i < sub.size(); ++i) {
                    if (!sub_counts[i]) continue;
                    for (size_t pos = 0; pos < sub[i].size(); ++pos)
                        scores[base2.slot_of[sub[i][pos]]] += base2.vec[pos] * sub_counts[i];
                }
                const auto w2 = arg_max(base2.participants, scores);
                if (!contains(w2, inst.preferred)) return 0;
                result = expand(sub_counts, sub);
                return 1;
            }
            for (int c = remaining; c >= 0; --c) {
                sub_counts[t] = c;
                if (int r = self(self, t + 1, remaining - c)) return r;
            }
            return 0;
        };
        rec(rec, 0, k);
        return result;
    }

    SolveResult run(const std::string& tag) {
        auto rec = [&](auto&& self, size_t t, int remaining) -> int {
            if (t + 1 == counts.size()) {
                counts[t] = remaining;
                return evaluate();
            }
            for (int c = remaining; c >= 0; --c) {
                counts[t] = c;
                if (int r = self(self, t + 1, remaining - c)) return r;
            }
            return 0;
        };
        const int outcome = rec(rec, 0, k);
        if (outcome == 2) return finish_plain(Verdict::Unknown, tag, budget.used);
        if (outcome == 1) return finish_manipulable(inst, semantics, std::move(found), tag, budget.used);
        return finish_plain(Verdict::NotManipulable, tag, budget.used);
    }
};

// Greedy evaluation of a full two-round profile; the documented demonstration
// path for forcing Strategy::Greedy in runoff modes.
SolveResult greedy_two_round(const ManipulationInstance& inst, ThenSemantics semantics) {
    const auto ids = all_ids(inst.nonmanipulators);
    auto scores = tally(inst.nonmanipulators, inst.protocol);
    const auto vec = inst.protocol.score_vector(static_cast<int>(ids.size()));
    Certificate cert;
    for (long long w : inst.manipulator_weights) {
        const Ballot b = greedy_ballot(scores, inst.preferred);
        for (size_t pos = 0; pos < b.size(); ++pos) scores[b[pos]] += vec[pos] * w;
        cert.plans.push_back({w, b, std::nullopt});
    }
    const long long nodes = std::max<long long>(1, static_cast<long long>(cert.plans.size()));

    const auto w1 = arg_max(ids, scores);
    if (!contains(w1, inst.preferred))
        return finish_plain(Verdict::NotManipulable, "greedy", nodes);

    const bool runoff_happens =
        !(w1.size() == 1 && semantics == ThenSemantics::DecisiveStop);
    if (runoff_happens && w1.size() > 1 && inst.mode == Mode::RevotingRunoff) {
        // Fresh greedy ballots against the running runoff tally.
        auto rt = round_two_base(inst.nonmanipulators, inst.protocol, w1);
        std::vector<long long> dense(static_cast<size_t>(ids.size()), 0);
        for (size_t i = 0; i < rt.participants.size(); ++i) dense[rt.participants[i]] = rt.scores[i];
        for (auto& plan : cert.plans) {
            Ballot rb = greedy_ballot(dense, inst.preferred);
            // greedy_ballot works over all ids; keep only the survivors, in order.
            rb = restrict_ballot(rb, w1);
            for (size_t pos = 0; pos < rb.size(); ++pos) dense[rb[pos]] += rt.vec[pos] * plan.weight;
            plan.runoff = rb;
        }
    } else if (runoff_happens && w1.size() > 1 && inst.mode == Mode::Runoff) {
        for (auto& plan : cert.plans) plan.runoff = restrict_ballot(plan.initial, w1);
    }

    const auto check = verify_certificate(inst, cert, semantics);
    if (check.status == VerifyResult::Status::Malformed)
        throw std::logic_error("greedy profile assembled a malformed certificate: " + check.reason);
    if (check.success())
        return finish_manipulable(inst, semantics, std::move(cert), "greedy", nodes);
    return finish_plain(Verdict::NotManipulable, "greedy", nodes);
}

}  // namespace

Ballot greedy_ballot(const std::vector<long long>& scores, int preferred) {
    if (preferred < 0 || static_cast<size_t>(preferred) >= scores.size())
        throw std::invalid_argument("preferred candidate id out of range");
    std::vector<int> others;
    for (size_t c = 0; c < scores.size(); ++c) {
        if (static_cast<int>(c) != preferred) others.push_back(static_cast<int>(c));
    }
    std::sort(others.begin(), others.end(), [&](int a, int b) {
        return scores[a] != scores[b] ? scores[a] < scores[b] : a < b;
    });
    Ballot out{preferred};
    out.insert(out.end(), others.begin(), others.end());
    return out;
}

Ballot greedy_single(const ManipulationInstance& instance) {
    instance.validate();
    if (instance.manipulator_weights.size() != 1)
        throw std::invalid_argument("greedy_single requires exactly one manipulator");
    return greedy_ballot(tally(instance.nonmanipulators, instance.protocol), instance.preferred);
}

SolveResult solve_single_round(const ManipulationInstance& instance, const SolveOptions&,
                               ThenSemantics semantics) {
    instance.validate();
    if (instance.mode != Mode::Single)
        throw std::invalid_argument("solve_single_round requires Single mode");

    const auto ids = all_ids(instance.nonmanipulators);
    auto scores = tally(instance.nonmanipulators, instance.protocol);
    const auto vec = instance.protocol.score_vector(static_cast<int>(ids.size()));
    Certificate cert;
    for (long long w : instance.manipulator_weights) {
        const Ballot b = greedy_ballot(scores, instance.preferred);
        for (size_t pos = 0; pos < b.size(); ++pos) scores[b[pos]] += vec[pos] * w;
        cert.plans.push_back({w, b, std::nullopt});
    }
    const long long nodes = std::max<long long>(1, static_cast<long long>(cert.plans.size()));

    const auto w = arg_max(ids, scores);
    if (contains(w, instance.preferred))
        return finish_manipulable(instance, semantics, std::move(cert), "greedy", nodes);
    if (instance.manipulator_weights.size() <= 1)
        return finish_plain(Verdict::NotManipulable, "greedy", nodes);
    // Greedy is exact only for a single manipulator; report an honest miss.
    return finish_plain(Verdict::Unknown, "greedy", nodes);
}

SolveResult solve_exhaustive(const ManipulationInstance& instance, const SolveOptions& options,
                             ThenSemantics semantics) {
    instance.validate();
    if (instance.protocol.kind == ProtocolKind::Veto && options.veto_canonicalization)
        return VetoSearch(instance, options, semantics).run("veto-canonical");
    return RawSearch(instance, options, semantics).run("exhaustive");
}

SolveResult solve_bucket(const ManipulationInstance& instance, const SolveOptions& options,
                         ThenSemantics semantics) {
    instance.validate();
    for (long long w : instance.manipulator_weights) {
        if (w != 1) throw std::invalid_argument("solve_bucket requires unweighted manipulators");
    }
    if (instance.nonmanipulators.num_candidates() > options.bucket_max_candidates)
        throw std::invalid_argument("solve_bucket candidate bound exceeded");
    return BucketSearch(instance, options, semantics).run("bucket");
}

SolveResult solve_plurality_weighted(const ManipulationInstance& instance, ThenSemantics semantics) {
    instance.validate();
    if (instance.protocol.kind != ProtocolKind::Plurality)
        throw std::invalid_argument("solve_plurality_weighted requires the Plurality protocol");

    const auto ids = all_ids(instance.nonmanipulators);
    Ballot preferred_first{instance.preferred};
    for (int c : ids) {
        if (c != instance.preferred) preferred_first.push_back(c);
    }
    Certificate cert;
    for (long long w : instance.manipulator_weights) cert.plans.push_back({w, preferred_first, std::nullopt});

    // Fill in explicit runoff ballots when a runoff actually happens. The
    // restriction keeps p on top, which is also the optimal revote.
    const auto probe = run_two_round(instance.nonmanipulators, instance.protocol, cert.plans,
                                     instance.mode, semantics);
    if (probe.runoff_held) {
        for (auto& plan : cert.plans)
            plan.runoff = restrict_ballot(plan.initial, probe.initial_winners);
    }
    const bool won = std::binary_search(probe.overall_winners.begin(), probe.overall_winners.end(),
                                        instance.preferred);
    if (won) return finish_manipulable(instance, semantics, std::move(cert), "fastpath", 1);
    return finish_plain(Verdict::NotManipulable, "fastpath", 1);
}

SolveResult solve(const ManipulationInstance& instance, ThenSemantics semantics, Strategy strategy,
                  const SolveOptions& options) {
    instance.validate();
    const size_t k = instance.manipulator_weights.size();
    const bool unweighted = std::all_of(instance.manipulator_weights.begin(),
                                        instance.manipulator_weights.end(),
                                        [](long long w) { return w == 1; });

    switch (strategy) {
        case Strategy::Fastpath:
            return solve_plurality_weighted(instance, semantics);
        case Strategy::Greedy:
            if (instance.mode == Mode::Single) return solve_single_round(instance, options, semantics);
            return greedy_two_round(instance, semantics);
        case Strategy::Bucket:
            return solve_bucket(instance, options, semantics);
        case Strategy::Exhaustive:
            return solve_exhaustive(instance, options, semantics);
        case Strategy::Auto:
            break;
    }

    if (instance.protocol.kind == ProtocolKind::Plurality)
        return solve_plurality_weighted(instance, semantics);
    if (instance.mode == Mode::Single && k <= 1)
        return solve_single_round(instance, options, semantics);
    if (instance.protocol.kind == ProtocolKind::Veto && options.veto_canonicalization)
        return solve_exhaustive(instance, options, semantics);
    if (unweighted && instance.nonmanipulators.num_candidates() <= options.bucket_max_candidates)
        return solve_bucket(instance, options, semantics);
    return solve_exhaustive(instance, options, semantics);
}

}  // namespace runoff
