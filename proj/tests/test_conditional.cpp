#include <doctest.h>

#include "test_support.hpp"
#include "winprob/winprob.hpp"

using namespace winprob;
using testsupport::make_pp;
using testsupport::make_profile;

namespace {
constexpr double kTol = 1e-9;

PartialAssignment random_assignment(RngStream& rng, int n) {
    PartialAssignment assign;
    for (int v = 0; v < n; ++v) {
        if (rng.uniform() < 0.4) {
            assign.decided.push_back(v);
            if (rng.uniform() < 0.5) assign.present.push_back(v);
        }
    }
    return assign;
}

} // namespace

TEST_CASE("pairwise margin values") {
    // voter ranks b over a: plurality margin of a over b is -1
    Profile p = make_profile(2, {{1, 0}});
    CHECK(pairwise_margin_values(Rule::plurality(), p, 0, 1) == std::vector<Score>{-1});
    // Borda m=3, voter (a,c,b): margin of a over b is 2
    Profile q = make_profile(3, {{0, 2, 1}});
    CHECK(pairwise_margin_values(Rule::borda(), q, 0, 1) == std::vector<Score>{2});
    CHECK_THROWS_AS(pairwise_margin_values(Rule::borda(), q, 0, 0), ValidationError);
    CHECK_THROWS_AS(pairwise_margin_values(Rule::condorcet(), q, 0, 1), ValidationError);
}

TEST_CASE("positional exceed probability, hand cases") {
    // one voter (b,a) with p=0.7; the event s(b) > s(a) holds iff the voter shows
    auto pp = make_pp(2, {{1, 0}}, {0.7});
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    CHECK(exceed_prob_positional(pp, Rule::plurality(), event, PartialAssignment::none()) ==
          doctest::Approx(0.7).epsilon(kTol));
    CHECK(exceed_prob_positional(pp, Rule::plurality(), event, {{0}, {0}}) ==
          doctest::Approx(1.0).epsilon(kTol));
    CHECK(exceed_prob_positional(pp, Rule::plurality(), event, {{0}, {}}) ==
          doctest::Approx(0.0).epsilon(kTol));
}

TEST_CASE("condorcet tie-or-beat probability, hand cases") {
    LoseEvent event{0, 1, LoseEventKind::CondorcetTieOrBeat};
    // one voter (b,a): N(b,a) >= N(a,b) holds whether or not the voter shows
    auto pro_rival = make_pp(2, {{1, 0}}, {0.5});
    CHECK(tie_or_beat_prob_condorcet(pro_rival, event, PartialAssignment::none()) ==
          doctest::Approx(1.0).epsilon(kTol));
    // one voter (a,b): fails only when the voter is present
    auto pro_target = make_pp(2, {{0, 1}}, {0.5});
    CHECK(tie_or_beat_prob_condorcet(pro_target, event, PartialAssignment::none()) ==
          doctest::Approx(0.5).epsilon(kTol));
}

TEST_CASE("event probability dispatch") {
    auto pp = make_pp(2, {{1, 0}}, {0.7});
    CHECK(event_prob(pp, Rule::plurality(), {0, 1, LoseEventKind::PositionalStrict}) ==
          doctest::Approx(0.7).epsilon(kTol));
    auto never = make_pp(2, {{1, 0}, {0, 1}}, {0.0, 0.0});
    CHECK(event_prob(never, Rule::plurality(), {0, 1, LoseEventKind::PositionalStrict}) == 0.0);
    CHECK(event_prob(never, Rule::condorcet(), {0, 1, LoseEventKind::CondorcetTieOrBeat}) == 1.0);
    // kind must match the rule
    CHECK_THROWS_AS(event_prob(never, Rule::plurality(), {0, 1, LoseEventKind::CondorcetTieOrBeat}),
                    ValidationError);
    CHECK_THROWS_AS(event_prob(never, Rule::maximin(), {0, 1, LoseEventKind::PositionalStrict}),
                    ValidationError);
}

TEST_CASE("conditional DPs agree with enumeration") {
    RngStream rng(41);
    for (int round = 0; round < 60; ++round) {
        const int m = 2 + rng.uniform_int(0, 2);
        const int n = rng.uniform_int(1, 9);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        const int target = rng.uniform_int(0, m - 1);
        int rival = rng.uniform_int(0, m - 2);
        if (rival >= target) ++rival;
        auto assign = random_assignment(rng, n);

        const Rule rule = round % 2 ? Rule::borda() : Rule::k_approval(1);
        LoseEvent positional{target, rival, LoseEventKind::PositionalStrict};
        CHECK(exceed_prob_positional(pp, rule, positional, assign) ==
              doctest::Approx(testsupport::enum_conditional_prob(pp, rule, positional, assign))
                  .epsilon(kTol));

        LoseEvent condorcet{target, rival, LoseEventKind::CondorcetTieOrBeat};
        CHECK(tie_or_beat_prob_condorcet(pp, condorcet, assign) ==
              doctest::Approx(
                  testsupport::enum_conditional_prob(pp, Rule::condorcet(), condorcet, assign))
                  .epsilon(kTol));
    }
}

TEST_CASE("law of total probability over one undecided voter") {
    RngStream rng(43);
    for (int round = 0; round < 40; ++round) {
        const int m = 3;
        const int n = rng.uniform_int(2, 8);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        LoseEvent event{0, 1,
                        round % 2 ? LoseEventKind::PositionalStrict
                                  : LoseEventKind::CondorcetTieOrBeat};
        const Rule rule = round % 2 ? Rule::borda() : Rule::condorcet();
        auto assign = random_assignment(rng, n);
        int extra = -1;
        for (int v = 0; v < n; ++v)
            if (!testsupport::contains(assign.decided, v)) extra = v;
        if (extra < 0) continue;

        auto with_extra = assign;
        with_extra.decided.push_back(extra);
        auto with_present = with_extra;
        with_present.present.push_back(extra);

        auto eval = [&](const PartialAssignment& a) {
            return event.kind == LoseEventKind::PositionalStrict
                       ? exceed_prob_positional(pp, rule, event, a)
                       : tie_or_beat_prob_condorcet(pp, event, a);
        };
        const double p = pp.prob(extra);
        CHECK(eval(assign) ==
              doctest::Approx(p * eval(with_present) + (1.0 - p) * eval(with_extra)).epsilon(kTol));
    }
}

TEST_CASE("exceed, fall-behind and tie probabilities sum to one") {
    RngStream rng(47);
    for (int round = 0; round < 25; ++round) {
        const int m = 2 + rng.uniform_int(0, 2);
        const int n = rng.uniform_int(0, 8);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        const Rule rule = Rule::borda();
        LoseEvent ab{0, 1, LoseEventKind::PositionalStrict};
        LoseEvent ba{1, 0, LoseEventKind::PositionalStrict};
        const double b_over_a = event_prob(pp, rule, ab);
        const double a_over_b = event_prob(pp, rule, ba);
        CHECK(b_over_a >= 0.0);
        CHECK(b_over_a <= 1.0);
        // tie probability from enumeration
        double tie = 0.0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Profile sub = testsupport::sub_profile(pp.profile(), mask);
            if (total_score(rule, sub, 0) == total_score(rule, sub, 1))
                tie += testsupport::mask_probability(pp, mask);
        }
        CHECK(b_over_a + a_over_b + tie == doctest::Approx(1.0).epsilon(kTol));
    }
}

TEST_CASE("margin DP refuses oversized tables") {
    auto pp = random_instance(2, 40, ProbMode::fixed(0.5), 5);
    Rule huge = Rule::explicit_vector(ScoreVector({1'000'000, 0}));
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    CHECK_THROWS_AS(exceed_prob_positional(pp, huge, event, PartialAssignment::none()),
                    RefusalError);
}
