#include <cmath>
#include <doctest.h>
#include <map>

#include "test_support.hpp"
#include "winprob/winprob.hpp"

using namespace winprob;
using testsupport::make_pp;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("posterior sampling on degenerate instances") {
    // deterministic attendance: the posterior is a point mass
    auto pp = make_pp(3, {{1, 0, 2}, {0, 1, 2}, {1, 2, 0}}, {1.0, 0.0, 1.0});
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    RngStream rng(1);
    for (int i = 0; i < 5; ++i)
        CHECK(sample_posterior(pp, Rule::plurality(), event, rng) == std::vector<int>{0, 2});

    // the event forces the single voter to be present
    auto one = make_pp(2, {{1, 0}}, {0.7});
    RngStream rng2(2);
    for (int i = 0; i < 5; ++i)
        CHECK(sample_posterior(one, Rule::plurality(), event, rng2) == std::vector<int>{0});

    // zero-probability events are rejected
    auto hopeless = make_pp(2, {{0, 1}}, {1.0});
    CHECK_THROWS_AS(sample_posterior(hopeless, Rule::plurality(), event, rng2), ValidationError);
    CHECK_THROWS_AS(posterior_path_probability(hopeless, Rule::plurality(), event, {}),
                    ValidationError);
}

TEST_CASE("posterior path probabilities, hand cases") {
    auto one = make_pp(2, {{1, 0}}, {0.7});
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    CHECK(posterior_path_probability(one, Rule::plurality(), event, {0}) == 1.0);
    CHECK(posterior_path_probability(one, Rule::plurality(), event, {}) == 0.0);
}

TEST_CASE("posterior path probabilities equal the enumerated posterior") {
    RngStream rng(53);
    for (int round = 0; round < 12; ++round) {
        const int m = 2 + rng.uniform_int(0, 1);
        const int n = rng.uniform_int(1, 8);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        const bool positional = round % 2 == 0;
        const Rule rule = positional ? Rule::borda() : Rule::condorcet();
        LoseEvent event{0, 1,
                        positional ? LoseEventKind::PositionalStrict
                                   : LoseEventKind::CondorcetTieOrBeat};
        if (event_prob(pp, rule, event) <= 0.0) continue;

        auto posterior = testsupport::enum_posterior(pp, rule, event);
        double sum = 0.0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const double path = posterior_path_probability(pp, rule, event,
                                                           testsupport::mask_to_subset(mask, n));
            const auto it = posterior.find(mask);
            const double expected = it == posterior.end() ? 0.0 : it->second;
            CHECK(path == doctest::Approx(expected).epsilon(kTol));
            sum += path;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(kTol));
    }
}

TEST_CASE("posterior sampler matches the enumerated posterior empirically") {
    auto pp = random_instance(3, 6, ProbMode::uniform(), 97);
    const Rule rule = Rule::borda();
    LoseEvent event{0, 2, LoseEventKind::PositionalStrict};
    REQUIRE(event_prob(pp, rule, event) > 0.0);
    auto expected = testsupport::enum_posterior(pp, rule, event);

    const int samples = 100'000;
    std::map<std::uint64_t, int> counts;
    RngStream rng(123);
    for (int i = 0; i < samples; ++i)
        ++counts[testsupport::to_mask(sample_posterior(pp, rule, event, rng))];

    double tv = 0.0;
    for (const auto& [mask, prob] : expected) {
        const auto it = counts.find(mask);
        const double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / samples;
        tv += std::abs(prob - freq);
    }
    for (const auto& [mask, count] : counts)
        if (!expected.count(mask)) tv += static_cast<double>(count) / samples;
    CHECK(tv / 2.0 < 0.02);
}

TEST_CASE("trial count formulas") {
    CHECK(additive_trial_count(0.05, 0.01) == 1060); // ceil(ln(200) / 0.005)
    CHECK(additive_trial_count(0.05, 0.05) == 738);
    CHECK(klm_trial_count(1, 0.5, 0.5) == 17);
    CHECK(klm_trial_count(3, 0.1, 0.05) == 3320); // ceil(9 ln 40 / 0.01)
}

TEST_CASE("klm with a single rival returns the event weight for any seed") {
    auto pp = make_pp(2, {{1, 0}, {0, 1}, {1, 0}}, {0.3, 0.6, 0.8});
    const double weight =
        event_prob(pp, Rule::plurality(), {0, 1, LoseEventKind::PositionalStrict});
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        EstimatorConfig config;
        config.epsilon = 0.2;
        config.delta = 0.2;
        config.seed = seed;
        Estimate est = klm_lose_prob(pp, Rule::plurality(), 0, config);
        CHECK(est.method == EstimateMethod::Klm);
        CHECK(est.value == doctest::Approx(weight).epsilon(kTol));
    }
}

TEST_CASE("klm exact shortcut when no lose event is possible") {
    // target ranked first by every voter, all p = 1
    auto pp = make_pp(3, {{0, 1, 2}, {0, 2, 1}}, {1.0, 1.0});
    Estimate est = klm_lose_prob(pp, Rule::plurality(), 0, {});
    CHECK(est.method == EstimateMethod::ExactShortcut);
    CHECK(est.value == 0.0);
    CHECK(est.trials == 0);
}

TEST_CASE("klm rejects maximin and oversized scores") {
    auto pp = random_instance(3, 4, ProbMode::uniform(), 7);
    CHECK_THROWS_AS(klm_lose_prob(pp, Rule::maximin(), 0, {}), UnsupportedRuleError);

    auto big = random_instance(2, 40, ProbMode::fixed(0.5), 8);
    Rule huge = Rule::explicit_vector(ScoreVector({100'000'000, 0}));
    CHECK_THROWS_AS(klm_lose_prob(big, huge, 0, {}), UnsupportedRuleError);
}

TEST_CASE("klm estimate lands near the brute-force losing probability") {
    RngStream rng(59);
    int checked = 0;
    for (int round = 0; checked < 6 && round < 40; ++round) {
        const int m = 3 + rng.uniform_int(0, 1);
        const int n = 4 + rng.uniform_int(0, 6);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        const Rule rule = round % 3 == 0   ? Rule::k_approval(2)
                          : round % 3 == 1 ? Rule::borda()
                                           : Rule::condorcet();
        const double truth = brute_force_lose_prob(pp, rule, 0, WinnerSemantics::CoWinner);
        if (truth < 0.05) continue;
        ++checked;
        EstimatorConfig config;
        config.epsilon = 0.1;
        config.delta = 0.05;
        config.seed = 1000 + static_cast<std::uint64_t>(round);
        Estimate est = klm_lose_prob(pp, rule, 0, config);
        CHECK(est.value >= 0.9 * truth);
        CHECK(est.value <= 1.1 * truth);
    }
    CHECK(checked == 6);
}

TEST_CASE("klm per-trial estimator is unbiased, exhaustively") {
    // E[U * X] over all (event, outcome) pairs equals Pr[union of events]
    RngStream rng(61);
    for (int round = 0; round < 8; ++round) {
        const int m = 2 + rng.uniform_int(0, 1);
        const int n = rng.uniform_int(1, 6);
        auto pp = random_instance(m, n, ProbMode::uniform(), rng.next());
        const bool positional = round % 2 == 0;
        const Rule rule = positional ? Rule::borda() : Rule::condorcet();
        const LoseEventKind kind =
            positional ? LoseEventKind::PositionalStrict : LoseEventKind::CondorcetTieOrBeat;
        const int target = 0;

        std::vector<LoseEvent> events;
        double total_weight = 0.0;
        for (int d = 0; d < m; ++d) {
            if (d == target) continue;
            events.push_back({target, d, kind});
            total_weight += event_prob(pp, rule, events.back());
        }
        if (total_weight == 0.0) continue;

        double expectation = 0.0;
        for (const LoseEvent& event : events) {
            const double weight = event_prob(pp, rule, event);
            if (weight == 0.0) continue;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const double path = posterior_path_probability(pp, rule, event,
                                                               testsupport::mask_to_subset(mask, n));
                if (path == 0.0) continue;
                // canonical event = smallest rival whose event holds on the outcome
                int canonical = -1;
                for (const LoseEvent& other : events) {
                    if (testsupport::event_holds(pp, rule, other, mask)) {
                        canonical = other.rival;
                        break;
                    }
                }
                const double x = canonical == event.rival ? 1.0 : 0.0;
                expectation += (weight / total_weight) * path * total_weight * x;
            }
        }

        // Pr[union] by direct enumeration
        double truth = 0.0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            for (const LoseEvent& event : events) {
                if (testsupport::event_holds(pp, rule, event, mask)) {
                    truth += testsupport::mask_probability(pp, mask);
                    break;
                }
            }
        }
        CHECK(expectation == doctest::Approx(truth).epsilon(1e-7));
    }
}

TEST_CASE("additive monte carlo") {
    // deterministic instance: the estimate is exactly the winner indicator
    auto sure = random_instance(3, 5, ProbMode::fixed(1.0), 71);
    for (int c = 0; c < 3; ++c) {
        Estimate est = mc_win_prob_additive(sure, Rule::borda(), c, WinnerSemantics::CoWinner, {});
        const bool wins = testsupport::contains(
            winners(Rule::borda(), sure.profile(), WinnerSemantics::CoWinner), c);
        CHECK(est.value == (wins ? 1.0 : 0.0));
        CHECK(est.method == EstimateMethod::McAdditive);
    }

    // maximin random instance: additive guarantee against brute force
    auto pp = random_instance(3, 10, ProbMode::uniform(), 73);
    EstimatorConfig config;
    config.epsilon = 0.05;
    config.delta = 0.01;
    config.seed = 5;
    Estimate est = mc_win_prob_additive(pp, Rule::maximin(), 0, WinnerSemantics::CoWinner, config);
    CHECK(est.trials == 1060);
    const double truth = brute_force_win_prob(pp, Rule::maximin(), 0, WinnerSemantics::CoWinner);
    CHECK(std::abs(est.value - truth) <= config.epsilon);
}

TEST_CASE("estimators are reproducible and honor overrides") {
    auto pp = random_instance(3, 8, ProbMode::uniform(), 79);
    EstimatorConfig config;
    config.epsilon = 0.2;
    config.delta = 0.1;
    config.seed = 99;
    Estimate a = klm_lose_prob(pp, Rule::borda(), 1, config);
    Estimate b = klm_lose_prob(pp, Rule::borda(), 1, config);
    CHECK(a.value == b.value);
    CHECK(a.trials == b.trials);
    CHECK(a.config.epsilon == config.epsilon);
    CHECK(a.config.seed == config.seed);

    Estimate c = mc_win_prob_additive(pp, Rule::borda(), 1, WinnerSemantics::CoWinner, config);
    Estimate d = mc_win_prob_additive(pp, Rule::borda(), 1, WinnerSemantics::CoWinner, config);
    CHECK(c.value == d.value);

    config.trials_override = 17;
    CHECK(mc_win_prob_additive(pp, Rule::borda(), 1, WinnerSemantics::CoWinner, config).trials == 17);
    CHECK(klm_lose_prob(pp, Rule::borda(), 1, config).trials == 17);

    config.trials_override = 0;
    CHECK_THROWS_AS(klm_lose_prob(pp, Rule::borda(), 1, config), ValidationError);
    config.trials_override.reset();
    config.epsilon = 1.5;
    CHECK_THROWS_AS(klm_lose_prob(pp, Rule::borda(), 1, config), ValidationError);
}
