#pragma once

#include <array>
#include <optional>
#include <vector>

#include "runoff/engine.hpp"

namespace runoff {

// Exact cover by 3-sets: a universe {1..3k} and a collection of 3-element
// subsets; a cover is a choice of exactly k pairwise disjoint subsets.
struct X3CInstance {
    int k = 0;
    std::vector<std::array<int, 3>> sets;

    int universe_size() const { return 3 * k; }
    // k >= 1, at least 3 sets, each set three distinct members of {1..3k}.
    // Repeated sets are allowed.
    void validate() const;
};

// Lexicographically first cover as sorted 0-based set indices, or nullopt.
std::optional<std::vector<int>> x3c_oracle(const X3CInstance& instance);

// Is `cover` a valid exact cover for `instance`?
bool x3c_check_cover(const X3CInstance& instance, const std::vector<int>& cover);

// ---------------------------------------------------------------------------
// Veto construction
// ---------------------------------------------------------------------------
//
// Builds a Veto election in which k unit-weight manipulators can make the
// preferred candidate an overall two-round winner exactly when the cover
// instance is solvable. Candidates: p (preferred), e1..e3k (universe
// elements), s1..sn (one per set), r1..rk (runoff veto sponges), d, and the
// padded loser z. Every candidate collects exactly 3 nonmanipulator vetoes
// except z, which collects n+1.
struct VetoConstruction {
    X3CInstance source;
    Election election;
    int preferred = 0;
    std::vector<long long> manipulator_weights;  // k ones

    int n() const { return static_cast<int>(source.sets.size()); }
    int p() const { return 0; }
    int e(int j) const { return j; }                              // 1..3k
    int s(int i) const { return 3 * source.k + i; }               // 1..n
    int r(int t) const { return 3 * source.k + n() + t; }         // 1..k
    int d() const { return 3 * source.k + n() + source.k + 1; }
    int z() const { return d() + 1; }

    ManipulationInstance instance(Mode mode) const;
};

VetoConstruction gen_veto_construction(const X3CInstance& instance);

// Vote plans realizing a given cover: manipulator t ranks r_t second to last
// and the covered set's s-candidate last, so round one eliminates z and the
// covered s-candidates and the runoff vetoes land on the sponges. Runoff
// ballots are the restrictions, written out explicitly. Throws if `cover` is
// not a valid cover.
Certificate veto_cover_certificate(const VetoConstruction& construction,
                                   const std::vector<int>& cover);

// ---------------------------------------------------------------------------
// HalfApproval construction
// ---------------------------------------------------------------------------
//
// Builds an election under the top-half approval protocol (m = 2h candidates,
// the first h ballot positions score 1) in which a single manipulator can make
// p an overall winner exactly when the cover instance is solvable. Requires
// even k. Candidates: p, e1..e3k, s1..sn, r1..r(k/2), padding targets
// q1..q(h-k), d, z. Nonmanipulator bottom halves are padded so the zero
// counts come out exact: every real candidate z_target, every q one less,
// z the loser target. Ballots carrying p in the bottom half keep escape room:
// (z present) + min(#s present, k) <= k/2, which keeps p scoring in every
// runoff the manipulator can cause.
struct HalfApprovalConstruction {
    X3CInstance source;
    Election election;
    int preferred = 0;
    std::vector<long long> manipulator_weights;  // a single 1

    int half = 0;                 // h = n + 5k/2 + 3; m = 2h
    long long real_zero_target = 0;   // zero count shared by the real candidates
    long long loser_zero_target = 0;  // zero count of z

    int n() const { return static_cast<int>(source.sets.size()); }
    int p() const { return 0; }
    int e(int j) const { return j; }                                   // 1..3k
    int s(int i) const { return 3 * source.k + i; }                    // 1..n
    int r(int t) const { return 3 * source.k + n() + t; }              // 1..k/2
    int q(int t) const { return 3 * source.k + n() + source.k / 2 + t; }  // 1..h-k
    int d() const { return q(half - source.k) + 1; }
    int z() const { return d() + 1; }

    ManipulationInstance instance(Mode mode) const;
};

HalfApprovalConstruction gen_halfapproval_construction(const X3CInstance& instance);

// The single manipulator's plan for a given cover: bottom half = all q's plus
// the covered s-candidates (zeroing them out of the runoff), with the r's
// just above the fold. Runoff ballot is the restriction, written explicitly.
// Throws if `cover` is not a valid cover.
Certificate halfapproval_cover_certificate(const HalfApprovalConstruction& construction,
                                           const std::vector<int>& cover);

}  // namespace runoff
