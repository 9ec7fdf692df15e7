#include "runoff/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace runoff {

namespace {

std::string cand_name(const std::string& stem, int index) { return stem + std::to_string(index); }

std::vector<int> sorted_cover(const X3CInstance& instance, const std::vector<int>& cover) {
    if (!x3c_check_cover(instance, cover))
        throw std::invalid_argument("not a valid exact cover for this instance");
    auto out = cover;
    std::sort(out.begin(), out.end());
    return out;
}

Ballot ballot_with_tail(int m, const std::vector<int>& tail) {
    std::vector<char> in_tail(static_cast<size_t>(m), 0);
    for (int c : tail) in_tail[c] = 1;
    Ballot b;
    b.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
        if (!in_tail[c]) b.push_back(c);
    }
    b.insert(b.end(), tail.begin(), tail.end());
    return b;
}

}  // namespace

void X3CInstance::validate() const {
    if (k < 1) throw std::invalid_argument("cover size k must be >= 1");
    if (sets.size() < 3) throw std::invalid_argument("need at least 3 sets");
    for (const auto& t : sets) {
        for (int e : t) {
            if (e < 1 || e > 3 * k)
                throw std::invalid_argument("set member " + std::to_string(e) +
                                            " outside the universe 1.." + std::to_string(3 * k));
        }
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw std::invalid_argument("sets must have three distinct members");
    }
}

std::optional<std::vector<int>> x3c_oracle(const X3CInstance& instance) {
    instance.validate();
    const int n = static_cast<int>(instance.sets.size());
    const int k = instance.k;
    if (k > n) return std::nullopt;
    std::vector<int> combo(static_cast<size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    auto covers = [&](const std::vector<int>& c) {
        std::vector<char> seen(static_cast<size_t>(3 * k) + 1, 0);
        for (int i : c) {
            for (int e : instance.sets[i]) {
                if (seen[e]) return false;
                seen[e] = 1;
            }
        }
        return true;  // k disjoint triples over a 3k universe cover it
    };
    while (true) {
        if (covers(combo)) return combo;
        // next k-combination of {0..n-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
}

bool x3c_check_cover(const X3CInstance& instance, const std::vector<int>& cover) {
    instance.validate();
    if (static_cast<int>(cover.size()) != instance.k) return false;
    std::vector<char> seen(static_cast<size_t>(3 * instance.k) + 1, 0);
    std::set<int> used;
    for (int i : cover) {
        if (i < 0 || i >= static_cast<int>(instance.sets.size())) return false;
        if (!used.insert(i).second) return false;
        for (int e : instance.sets[i]) {
            if (seen[e]) return false;
            seen[e] = 1;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Veto
// ---------------------------------------------------------------------------

ManipulationInstance VetoConstruction::instance(Mode mode) const {
    return {election, ScoringProtocol::veto(), manipulator_weights, preferred, mode};
}

VetoConstruction gen_veto_construction(const X3CInstance& instance) {
    instance.validate();
    VetoConstruction out;
    out.source = instance;
    const int k = instance.k;
    const int n = static_cast<int>(instance.sets.size());
    const int m = 4 * k + n + 3;

    out.election.candidates.push_back({out.p(), "p"});
    for (int j = 1; j <= 3 * k; ++j) out.election.candidates.push_back({out.e(j), cand_name("e", j)});
    for (int i = 1; i <= n; ++i) out.election.candidates.push_back({out.s(i), cand_name("s", i)});
    for (int t = 1; t <= k; ++t) out.election.candidates.push_back({out.r(t), cand_name("r", t)});
    out.election.candidates.push_back({out.d(), "d"});
    out.election.candidates.push_back({out.z(), "z"});

    auto add = [&](const std::vector<int>& tail, int count) {
        out.election.votes.push_back({ballot_with_tail(m, tail), 1, count});
    };
    for (int i = 1; i <= n; ++i) {
        for (int j : instance.sets[i - 1]) add({out.p(), out.e(j), out.s(i)}, 1);
    }
    add({out.p()}, 3);
    for (int j = 1; j <= 3 * k; ++j) add({out.p(), out.e(j)}, 3);
    for (int t = 1; t <= k; ++t) add({out.p(), out.r(t)}, 3);
    add({out.p(), out.d()}, 3);
    add({out.p(), out.z()}, 1);
    for (int i = 1; i <= n; ++i) add({out.p(), out.d(), out.s(i), out.z()}, 1);

    out.election.validate();

    // Every candidate takes exactly 3 nonmanipulator vetoes; z takes n+1.
    std::vector<long long> vetoes(static_cast<size_t>(m), 0);
    for (const auto& v : out.election.votes) vetoes[v.ballot.back()] += v.weight * v.count;
    for (int c = 0; c < m; ++c) {
        const long long want = (c == out.z()) ? n + 1 : 3;
        if (vetoes[c] != want)
            throw std::logic_error("veto profile off at candidate " + std::to_string(c));
    }

    out.manipulator_weights.assign(static_cast<size_t>(k), 1);
    return out;
}

Certificate veto_cover_certificate(const VetoConstruction& construction,
                                   const std::vector<int>& cover) {
    const auto chosen = sorted_cover(construction.source, cover);
    const int m = construction.election.num_candidates();

    std::vector<int> survivors;
    std::set<int> dropped{construction.z()};
    for (int i : chosen) dropped.insert(construction.s(i + 1));
    for (int c = 0; c < m; ++c) {
        if (!dropped.count(c)) survivors.push_back(c);
    }

    Certificate cert;
    for (size_t t = 0; t < chosen.size(); ++t) {
        VotePlan plan;
        plan.weight = 1;
        plan.initial = ballot_with_tail(
            m, {construction.r(static_cast<int>(t) + 1), construction.s(chosen[t] + 1)});
        plan.runoff = restrict_ballot(plan.initial, survivors);
        cert.plans.push_back(std::move(plan));
    }
    return cert;
}

// ---------------------------------------------------------------------------
// HalfApproval
// ---------------------------------------------------------------------------

ManipulationInstance HalfApprovalConstruction::instance(Mode mode) const {
    return {election, ScoringProtocol::half_approval(), manipulator_weights, preferred, mode};
}

namespace {

// A nonmanipulator ballot under construction: the bottom-half membership plus
// the pinned layout pieces. `prefix` opens the bottom half, `tail` closes it,
// `mand` are the members that must not be swapped away.
struct PadBallot {
    std::set<int> bot;
    std::set<int> mand;
    std::vector<int> prefix;
    std::vector<int> tail;
    int idx = 0;
};

bool vec_contains(const std::vector<int>& v, int c) {
    return std::find(v.begin(), v.end(), c) != v.end();
}

}  // namespace

HalfApprovalConstruction gen_halfapproval_construction(const X3CInstance& instance) {
    instance.validate();
    const int k = instance.k;
    const int n = static_cast<int>(instance.sets.size());
    if (k % 2 != 0) throw std::invalid_argument("this construction needs an even cover size");

    HalfApprovalConstruction out;
    out.source = instance;
    out.half = n + 5 * k / 2 + 3;
    const int h = out.half;
    const int m = 2 * h;

    out.election.candidates.push_back({out.p(), "p"});
    for (int j = 1; j <= 3 * k; ++j) out.election.candidates.push_back({out.e(j), cand_name("e", j)});
    for (int i = 1; i <= n; ++i) out.election.candidates.push_back({out.s(i), cand_name("s", i)});
    for (int t = 1; t <= k / 2; ++t) out.election.candidates.push_back({out.r(t), cand_name("r", t)});
    for (int t = 1; t <= h - k; ++t) out.election.candidates.push_back({out.q(t), cand_name("q", t)});
    out.election.candidates.push_back({out.d(), "d"});
    out.election.candidates.push_back({out.z(), "z"});
    if (out.z() + 1 != m) throw std::logic_error("candidate roster does not reach 2h");

    const int p = out.p();
    const int l = out.z();
    std::set<int> qset;
    for (int t = 1; t <= h - k; ++t) qset.insert(out.q(t));
    std::set<int> sset;
    for (int i = 1; i <= n; ++i) sset.insert(out.s(i));

    std::vector<PadBallot> ballots;
    auto add = [&](const std::set<int>& mand, const std::vector<int>& prefix,
                   const std::vector<int>& tail, int mult = 1) {
        for (int c = 0; c < mult; ++c) {
            PadBallot b;
            b.bot = mand;
            b.mand = mand;
            b.prefix = prefix;
            b.tail = tail;
            ballots.push_back(std::move(b));
        }
    };
    for (int i = 1; i <= n; ++i) {
        for (int j : instance.sets[i - 1]) add({out.e(j), out.s(i)}, {}, {out.e(j), out.s(i)});
    }
    add({p}, {p}, {}, 3);
    for (int j = 1; j <= 3 * k; ++j) add({out.e(j)}, {}, {out.e(j)}, 3);
    for (int t = 1; t <= k / 2; ++t) add({out.r(t)}, {}, {out.r(t)}, 3);
    add({out.d()}, {}, {out.d()}, 3);
    add({p, l}, {p}, {l});
    for (int i = 1; i <= n; ++i) add({out.d(), out.s(i), l}, {out.d()}, {out.s(i), l});
    for (int t = 1; t <= h - k; ++t) {
        add({out.q(t)}, {}, {out.q(t)}, 2);
        add({out.q(t), l}, {}, {out.q(t), l});
    }
    const int N = static_cast<int>(ballots.size());
    if (N != 7 * n + 15 * k + 16) throw std::logic_error("ballot roster size off");
    for (int i = 0; i < N; ++i) ballots[static_cast<size_t>(i)].idx = i;

    // Exact zero-count targets: pick the largest z with
    //   coeff*z + L == N*h + (h-k),  max(z+1, mandatory l count) <= L <= N.
    const long long l_mand = 1 + n + (h - k);
    const long long coeff = 2 * n + 5 * k + 5;
    const long long rhs = static_cast<long long>(N) * h + (h - k);
    long long z = -1, L = -1;
    for (long long zz = (rhs - 1) / coeff; zz > 3; --zz) {
        const long long LL = rhs - coeff * zz;
        if (std::max(zz + 1, l_mand) <= LL && LL <= N) {
            z = zz;
            L = LL;
            break;
        }
    }
    if (z < 0) throw std::logic_error("no feasible zero profile for these parameters");
    out.real_zero_target = z;
    out.loser_zero_target = L;

    std::vector<long long> target(static_cast<size_t>(m), z);
    for (int c : qset) target[c] = z - 1;
    target[l] = L;

    // A bottom half carrying p must keep an escape slot under every possible
    // cover: at most k/2 of its members can leave the runoff.
    auto room_ok = [&](const std::set<int>& bot) {
        long long s_members = 0;
        for (int c : sset) s_members += bot.count(c);
        return static_cast<long long>(bot.count(l)) + std::min<long long>(s_members, k) <= k / 2;
    };
    auto can_add = [&](const PadBallot& v, int c) {
        if (v.bot.count(c) || static_cast<int>(v.bot.size()) >= h) return false;
        if (v.bot.count(p) || c == p) {
            auto nb = v.bot;
            nb.insert(c);
            if (!room_ok(nb)) return false;
        }
        return true;
    };

    std::vector<long long> deficit = target;
    for (const auto& v : ballots) {
        for (int c : v.bot) --deficit[c];
    }
    for (int c = 0; c < m; ++c) {
        if (deficit[c] < 0) throw std::logic_error("mandatory members exceed the zero target");
    }

    // Constrained columns first: p, z, then the s-candidates, handed to the
    // ballots with the most free bottom slots.
    std::vector<int> constrained{p, l};
    for (int i = 1; i <= n; ++i) constrained.push_back(out.s(i));
    for (int c : constrained) {
        std::vector<PadBallot*> elig;
        for (auto& v : ballots) {
            if (can_add(v, c)) elig.push_back(&v);
        }
        std::sort(elig.begin(), elig.end(), [](const PadBallot* a, const PadBallot* b) {
            if (a->bot.size() != b->bot.size()) return a->bot.size() < b->bot.size();
            return a->idx < b->idx;
        });
        long long need = deficit[c];
        for (auto* v : elig) {
            if (need == 0) break;
            v->bot.insert(c);
            if (c == p) v->prefix.insert(v->prefix.begin(), p);
            --need;
        }
        if (need != 0) throw std::logic_error("cannot place constrained candidate " + std::to_string(c));
        deficit[c] = 0;
    }

    // Balanced bulk fill: the emptiest ballot takes the highest-deficit
    // eligible candidate; when none fits, swap a movable filler out of some
    // ballot that can still legally host a deficit candidate.
    std::set<int> special{p, l};
    special.insert(sset.begin(), sset.end());
    auto movable = [&](const PadBallot& u, int c) {
        return !special.count(c) && !vec_contains(u.prefix, c) && !vec_contains(u.tail, c) &&
               !u.mand.count(c);
    };
    while (true) {
        PadBallot* v = nullptr;
        for (auto& b : ballots) {
            if (static_cast<int>(b.bot.size()) >= h) continue;
            if (!v || b.bot.size() < v->bot.size() || (b.bot.size() == v->bot.size() && b.idx < v->idx))
                v = &b;
        }
        if (!v) break;

        int pick = -1;
        for (int c = 0; c < m; ++c) {
            if (deficit[c] > 0 && can_add(*v, c) && (pick < 0 || deficit[c] > deficit[pick])) pick = c;
        }
        if (pick >= 0) {
            v->bot.insert(pick);
            --deficit[pick];
            continue;
        }

        std::vector<int> cdefs;
        for (int c = 0; c < m; ++c) {
            if (deficit[c] > 0) cdefs.push_back(c);
        }
        if (cdefs.empty()) throw std::logic_error("free slots remain with no deficit left");
        std::sort(cdefs.begin(), cdefs.end(), [&](int a, int b) {
            return deficit[a] != deficit[b] ? deficit[a] > deficit[b] : a < b;
        });
        bool done = false;
        for (int cdef : cdefs) {
            for (auto& u : ballots) {
                if (&u == v || u.bot.count(cdef)) continue;
                for (int cx : std::vector<int>(u.bot.begin(), u.bot.end())) {
                    if (!movable(u, cx) || !can_add(*v, cx)) continue;
                    // The swap must leave u legal as well.
                    u.bot.erase(cx);
                    if (!can_add(u, cdef)) {
                        u.bot.insert(cx);
                        continue;
                    }
                    u.bot.insert(cdef);
                    v->bot.insert(cx);
                    --deficit[cdef];
                    done = true;
                    break;
                }
                if (done) break;
            }
            if (done) break;
        }
        if (!done) throw std::logic_error("padding fill got stuck");
    }
    for (int c = 0; c < m; ++c) {
        if (deficit[c] != 0) throw std::logic_error("zero-count deficit unresolved");
    }

    // Assemble: bottom = prefix ++ [q fillers asc] ++ [other fillers asc]
    // ++ [z if unpinned] ++ tail; top = p first when p scores, rest ascending.
    for (const auto& v : ballots) {
        std::vector<int> mid_q, mid_rest;
        bool mid_l = false;
        for (int c : v.bot) {
            if (vec_contains(v.prefix, c) || vec_contains(v.tail, c)) continue;
            if (c == l)
                mid_l = true;
            else if (qset.count(c))
                mid_q.push_back(c);
            else
                mid_rest.push_back(c);
        }
        std::vector<int> bottom = v.prefix;
        bottom.insert(bottom.end(), mid_q.begin(), mid_q.end());
        bottom.insert(bottom.end(), mid_rest.begin(), mid_rest.end());
        if (mid_l) bottom.push_back(l);
        bottom.insert(bottom.end(), v.tail.begin(), v.tail.end());
        if (static_cast<int>(bottom.size()) != h) throw std::logic_error("bottom half size off");
        if (v.bot.count(p) && !room_ok(v.bot)) throw std::logic_error("p lost its escape room");

        Ballot full;
        if (!v.bot.count(p)) full.push_back(p);
        for (int c = 0; c < m; ++c) {
            if (c != p && !v.bot.count(c)) full.push_back(c);
        }
        full.insert(full.end(), bottom.begin(), bottom.end());
        out.election.votes.push_back({std::move(full), 1, 1});
    }

    out.election.validate();

    // The whole point: the final zero counts must be exact.
    std::vector<long long> zero_count(static_cast<size_t>(m), 0);
    for (const auto& vote : out.election.votes) {
        for (size_t pos = static_cast<size_t>(h); pos < vote.ballot.size(); ++pos)
            zero_count[vote.ballot[pos]] += vote.weight * vote.count;
    }
    for (int c = 0; c < m; ++c) {
        if (zero_count[c] != target[c])
            throw std::logic_error("assembled zero profile off at candidate " + std::to_string(c));
    }

    out.manipulator_weights = {1};
    return out;
}

Certificate halfapproval_cover_certificate(const HalfApprovalConstruction& construction,
                                           const std::vector<int>& cover) {
    const auto chosen = sorted_cover(construction.source, cover);
    const int m = construction.election.num_candidates();
    const int h = construction.half;
    const int k = construction.source.k;

    std::vector<int> tail;
    for (int t = 1; t <= k / 2; ++t) tail.push_back(construction.r(t));
    for (int t = 1; t <= h - k; ++t) tail.push_back(construction.q(t));
    for (int i : chosen) tail.push_back(construction.s(i + 1));

    std::vector<int> survivors;
    std::set<int> dropped{construction.z()};
    for (int i : chosen) dropped.insert(construction.s(i + 1));
    for (int c = 0; c < m; ++c) {
        if (!dropped.count(c)) survivors.push_back(c);
    }

    VotePlan plan;
    plan.weight = 1;
    plan.initial = ballot_with_tail(m, tail);
    plan.runoff = restrict_ballot(plan.initial, survivors);
    Certificate cert;
    cert.plans.push_back(std::move(plan));
    return cert;
}

}  // namespace runoff
