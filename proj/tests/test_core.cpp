#include <doctest.h>

#include <stdexcept>

#include "runoff/core.hpp"

using namespace runoff;

namespace {

Election make_election(int m, std::vector<WeightedVote> votes) {
    Election e;
    for (int i = 0; i < m; ++i) e.candidates.push_back({i, "c" + std::to_string(i)});
    e.votes = std::move(votes);
    return e;
}

}  // namespace

TEST_CASE("score vectors by protocol") {
    CHECK(ScoringProtocol::plurality().score_vector(4) == std::vector<long long>{1, 0, 0, 0});
    CHECK(ScoringProtocol::veto().score_vector(4) == std::vector<long long>{1, 1, 1, 0});
    CHECK(ScoringProtocol::veto().score_vector(1) == std::vector<long long>{0});
    CHECK(ScoringProtocol::borda().score_vector(4) == std::vector<long long>{3, 2, 1, 0});
    CHECK(ScoringProtocol::triviality().score_vector(3) == std::vector<long long>{0, 0, 0});

    // top half approval: ceil(m/2) ones
    CHECK(ScoringProtocol::half_approval().score_vector(4) == std::vector<long long>{1, 1, 0, 0});
    CHECK(ScoringProtocol::half_approval().score_vector(5) == std::vector<long long>{1, 1, 1, 0, 0});
    CHECK(ScoringProtocol::half_approval().score_vector(1) == std::vector<long long>{1});
}

TEST_CASE("explicit vectors act as a family") {
    auto proto = ScoringProtocol::from_vector({5, 3, 3, 1});
    CHECK(proto.score_vector(4) == std::vector<long long>{5, 3, 3, 1});
    // smaller elections take the prefix
    CHECK(proto.score_vector(2) == std::vector<long long>{5, 3});
    // larger ones are out of the family's reach
    CHECK_THROWS_AS(proto.score_vector(5), std::invalid_argument);
}

TEST_CASE("from_vector validation") {
    CHECK_THROWS_AS(ScoringProtocol::from_vector({}), std::invalid_argument);
    CHECK_THROWS_AS(ScoringProtocol::from_vector({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ScoringProtocol::from_vector({3, -1}), std::invalid_argument);
    CHECK_NOTHROW(ScoringProtocol::from_vector({2, 2, 0}));
    CHECK_NOTHROW(ScoringProtocol::from_vector({0}));
}

TEST_CASE("tally respects weights and counts") {
    std::vector<int> ids{0, 1, 2};
    std::vector<WeightedVote> votes{
        {{0, 1, 2}, 2, 1},  // weight 2
        {{1, 2, 0}, 1, 3},  // three identical unit voters
    };
    auto borda = ScoringProtocol::borda();
    // weight*count multiplies the score contribution
    CHECK(tally(ids, votes, borda) == std::vector<long long>{2 * 2 + 0, 2 * 1 + 3 * 2, 3 * 1});

    auto plur = ScoringProtocol::plurality();
    CHECK(tally(ids, votes, plur) == std::vector<long long>{2, 3, 0});
}

TEST_CASE("tally preconditions") {
    auto borda = ScoringProtocol::borda();
    std::vector<WeightedVote> votes{{{0, 1, 2}, 1, 1}};
    CHECK_THROWS_AS(tally({0, 2, 1}, votes, borda), std::invalid_argument);  // unsorted
    CHECK_THROWS_AS(tally({0, 1}, votes, borda), std::invalid_argument);     // ballot off-set
    CHECK_THROWS_AS(tally({}, votes, borda), std::invalid_argument);

    std::vector<WeightedVote> dup{{{0, 1, 1}, 1, 1}};
    CHECK_THROWS_AS(tally({0, 1, 2}, dup, borda), std::invalid_argument);
}

TEST_CASE("winners are the ascending argmax set") {
    std::vector<int> ids{0, 1, 2, 3};
    std::vector<WeightedVote> votes{
        {{1, 3, 0, 2}, 1, 1},
        {{3, 1, 2, 0}, 1, 1},
    };
    auto plur = ScoringProtocol::plurality();
    CHECK(winners(ids, votes, plur) == std::vector<int>{1, 3});

    // zero votes: everyone ties at 0
    CHECK(winners(ids, {}, plur) == std::vector<int>{0, 1, 2, 3});

    // triviality ties everyone regardless of ballots
    CHECK(winners(ids, votes, ScoringProtocol::triviality()) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("winners over a restricted participant set") {
    // three participants drawn from a larger id space; tally is aligned with
    // the sorted participant list, not with raw ids
    std::vector<int> ids{2, 5, 7};
    std::vector<WeightedVote> votes{
        {{5, 2, 7}, 1, 2},
        {{7, 5, 2}, 3, 1},
    };
    auto t = tally(ids, votes, ScoringProtocol::borda());
    CHECK(t == std::vector<long long>{2 * 1, 2 * 2 + 3 * 1, 3 * 2});
    CHECK(winners(ids, votes, ScoringProtocol::borda()) == std::vector<int>{5});
}

TEST_CASE("election overloads") {
    auto e = make_election(3, {{{2, 0, 1}, 1, 1}, {{0, 2, 1}, 1, 1}});
    CHECK(tally(e, ScoringProtocol::plurality()) == std::vector<long long>{1, 0, 1});
    CHECK(winners(e, ScoringProtocol::plurality()) == std::vector<int>{0, 2});
}

TEST_CASE("Election::validate catches ill-formed inputs") {
    auto good = make_election(2, {{{0, 1}, 1, 1}});
    CHECK_NOTHROW(good.validate());

    auto bad_weight = good;
    bad_weight.votes[0].weight = 0;
    CHECK_THROWS_AS(bad_weight.validate(), std::invalid_argument);

    auto bad_count = good;
    bad_count.votes[0].count = -2;
    CHECK_THROWS_AS(bad_count.validate(), std::invalid_argument);

    auto bad_ballot = good;
    bad_ballot.votes[0].ballot = {0, 0};
    CHECK_THROWS_AS(bad_ballot.validate(), std::invalid_argument);

    auto short_ballot = good;
    short_ballot.votes[0].ballot = {0};
    CHECK_THROWS_AS(short_ballot.validate(), std::invalid_argument);

    auto dup_name = good;
    dup_name.candidates[1].name = dup_name.candidates[0].name;
    CHECK_THROWS_AS(dup_name.validate(), std::invalid_argument);

    auto empty_name = good;
    empty_name.candidates[0].name = "";
    CHECK_THROWS_AS(empty_name.validate(), std::invalid_argument);

    // names travel through the vote file format, so '>' and whitespace are out
    auto gt_name = good;
    gt_name.candidates[0].name = "a>b";
    CHECK_THROWS_AS(gt_name.validate(), std::invalid_argument);
    auto ws_name = good;
    ws_name.candidates[0].name = "a b";
    CHECK_THROWS_AS(ws_name.validate(), std::invalid_argument);

    auto bad_id = good;
    bad_id.candidates[1].id = 5;
    CHECK_THROWS_AS(bad_id.validate(), std::invalid_argument);
}

TEST_CASE("candidate_by_name") {
    auto e = make_election(3, {});
    e.candidates[2].name = "zed";
    CHECK(e.candidate_by_name("c0") == 0);
    CHECK(e.candidate_by_name("zed") == 2);
    CHECK(e.candidate_by_name("c2") == -1);
    CHECK(e.candidate_by_name("") == -1);
}

TEST_CASE("restrict_ballot keeps order") {
    Ballot b{3, 0, 2, 1};
    CHECK(restrict_ballot(b, {0, 1, 3}) == Ballot{3, 0, 1});
    CHECK(restrict_ballot(b, {2}) == Ballot{2});
    CHECK(restrict_ballot(b, {0, 1, 2, 3}) == b);

    CHECK_THROWS_AS(restrict_ballot(b, {}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_ballot(b, {0, 4}), std::invalid_argument);  // 4 not on ballot
}

TEST_CASE("is_permutation_of") {
    CHECK(is_permutation_of({2, 0, 1}, {0, 1, 2}));
    CHECK(is_permutation_of({}, {}));
    CHECK_FALSE(is_permutation_of({0, 1}, {0, 1, 2}));
    CHECK_FALSE(is_permutation_of({0, 0, 1}, {0, 1, 2}));
    CHECK_FALSE(is_permutation_of({0, 1, 3}, {0, 1, 2}));
}
