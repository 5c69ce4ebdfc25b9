#include <cmath>
#include <doctest.h>

#include "test_support.hpp"
#include "winprob/winprob.hpp"

using namespace winprob;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph path(int edges) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
    return Graph(edges + 1, std::move(e));
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

unsigned long long fib(int k) { // fib(1) = fib(2) = 1
    unsigned long long a = 1, b = 1;
    for (int i = 2; i < k; ++i) {
        const auto c = a + b;
        a = b;
        b = c;
    }
    return k <= 2 ? 1 : b;
}

unsigned long long lucas(int k) { // lucas(1) = 1, lucas(2) = 3
    unsigned long long a = 2, b = 1;
    for (int i = 0; i < k; ++i) {
        const auto c = a + b;
        a = b;
        b = c;
    }
    return a;
}

} // namespace

TEST_CASE("graph and set-system validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
    CHECK_THROWS_AS(SetSystem(4, {}), ValidationError);
    CHECK_THROWS_AS(SetSystem(3, {{0, 1, 1}}), ValidationError);
    CHECK_THROWS_AS(SetSystem(3, {{0, 1, 3}}), ValidationError);
    CHECK_THROWS_AS(SetSystem(3, {{0, 1, 2}, {2, 1, 0}}), ValidationError); // duplicate set
}

TEST_CASE("block order") {
    CHECK(block_order(3, {{2, 0, 1}}).order == std::vector<int>{0, 1, 2});
    CHECK(block_order(3, {{2}, {0, 1}}).order == std::vector<int>{2, 0, 1});
    CHECK(block_order(3, {{2}, {1, 0}}).order == block_order(3, {{2}, {0, 1}}).order);
    CHECK_THROWS_AS(block_order(3, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(block_order(3, {{0, 1}, {1, 2}}), ValidationError);
}

TEST_CASE("counting oracles on small graphs") {
    CHECK(count_matchings_brute(Graph(0, {})) == 1);
    CHECK(count_edge_covers_brute(Graph(0, {})) == 1);
    CHECK(count_edge_covers_brute(Graph(1, {})) == 0);
    CHECK(count_matchings_brute(triangle()) == 4);
    CHECK(count_edge_covers_brute(triangle()) == 4);
    CHECK(count_edge_covers_brute(path(2)) == 1);
    // matchings of a path with k edges follow the Fibonacci sequence
    for (int k = 1; k <= 10; ++k) CHECK(count_matchings_brute(path(k)) == fib(k + 2));
    // edge covers of a cycle follow the Lucas sequence
    for (int k = 3; k <= 10; ++k) CHECK(count_edge_covers_brute(cycle(k)) == lucas(k));

    std::vector<std::pair<int, int>> many(21);
    for (int i = 0; i < 21; ++i) many[static_cast<std::size_t>(i)] = {i, i + 1};
    CHECK_THROWS_AS(count_matchings_brute(Graph(22, many)), RefusalError);
}

TEST_CASE("counting oracle for exact covers") {
    SetSystem single(3, {{0, 1, 2}});
    CHECK(count_exact_covers_brute(single) == 1);
    SetSystem no_cover(6, {{0, 1, 2}, {0, 3, 4}, {0, 4, 5}}); // q=2, all share element 0
    CHECK(count_exact_covers_brute(no_cover) == 0);
    SetSystem one_cover(6, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3}});
    CHECK(count_exact_covers_brute(one_cover) == 1);
    SetSystem two_covers(6, {{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}});
    CHECK(count_exact_covers_brute(two_covers) == 2);
}

TEST_CASE("matching construction") {
    auto gen = gen_kapproval_from_matching(triangle(), 2);
    CHECK(gen.count_kind == "matchings");
    CHECK(gen.rule.to_string() == "approval:2");
    CHECK(gen.instance.candidates.name(gen.instance.target) == "c");
    CHECK(gen.instance.registered.voter_count() == 1);
    CHECK(gen.instance.unregistered.voter_count() == 3);
    CHECK(ccauv_count_brute(gen.instance, gen.rule) == 4);

    Graph lone_edge(2, {{0, 1}});
    CHECK(ccauv_count_brute(gen_kapproval_from_matching(lone_edge, 2).instance,
                            Rule::k_approval(2)) == 2);

    // k = 3 adds one filler candidate per voter; the count is unchanged
    auto gen3 = gen_kapproval_from_matching(triangle(), 3);
    CHECK(ccauv_count_brute(gen3.instance, gen3.rule) == 4);

    CHECK_THROWS_AS(gen_kapproval_from_matching(triangle(), 1), ValidationError);
}

TEST_CASE("edge-cover construction") {
    auto gen = gen_kveto_from_edgecover(triangle(), 2);
    CHECK(gen.count_kind == "edge-covers");
    CHECK(ccauv_count_brute(gen.instance, gen.rule) == 4);
    CHECK(gen.note.empty());

    auto gen_path = gen_kveto_from_edgecover(path(2), 2);
    CHECK(ccauv_count_brute(gen_path.instance, gen_path.rule) == 1);

    // k = 3 shares one filler block across all voters; the count is unchanged
    auto gen3 = gen_kveto_from_edgecover(triangle(), 3);
    CHECK(ccauv_count_brute(gen3.instance, gen3.rule) == 4);
    CHECK_THROWS_AS(gen_kveto_from_edgecover(triangle(), 1), ValidationError);

    Graph isolated(3, {{0, 1}});
    auto gen_iso = gen_kveto_from_edgecover(isolated, 2);
    CHECK(!gen_iso.note.empty());
    CHECK(ccauv_count_brute(gen_iso.instance, gen_iso.rule) == 0);
}

TEST_CASE("x3c constructions") {
    SetSystem single(3, {{0, 1, 2}});
    auto condorcet = gen_condorcet_from_x3c(single);
    CHECK(condorcet.count_kind == "exact-covers");
    CHECK(ccauv_count_brute(condorcet.instance, condorcet.rule) == 1);
    CHECK(!condorcet.note.empty()); // padded (q < 3)

    auto maximin = gen_maximin_from_x3c(single);
    CHECK(ccauv_count_brute(maximin.instance, maximin.rule) == 1);
    CHECK(maximin.instance.registered.voter_count() == 4);

    SetSystem one_cover(6, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3}});
    auto c2 = gen_condorcet_from_x3c(one_cover);
    CHECK(ccauv_count_brute(c2.instance, c2.rule) == 1);
    auto m2 = gen_maximin_from_x3c(one_cover);
    CHECK(ccauv_count_brute(m2.instance, m2.rule) == 1);

    SetSystem no_cover(6, {{0, 1, 2}, {0, 3, 4}, {0, 4, 5}});
    CHECK(ccauv_count_brute(gen_condorcet_from_x3c(no_cover).instance, Rule::condorcet()) == 0);
    CHECK(ccauv_count_brute(gen_maximin_from_x3c(no_cover).instance, Rule::maximin()) == 0);
}

TEST_CASE("generated instances satisfy the probability form of the identity") {
    RngStream rng(103);
    std::vector<GeneratedInstance> generated;
    generated.push_back(gen_kapproval_from_matching(triangle(), 2));
    generated.push_back(gen_kveto_from_edgecover(path(2), 2));
    generated.push_back(gen_condorcet_from_x3c(SetSystem(3, {{0, 1, 2}})));
    generated.push_back(gen_maximin_from_x3c(SetSystem(6, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3}})));
    for (const auto& gen : generated) {
        const auto alpha = ccauv_count_brute(gen.instance, gen.rule);
        const double prob = brute_force_win_prob(ccauv_to_probabilistic(gen.instance), gen.rule,
                                                 gen.instance.target, WinnerSemantics::CoWinner);
        const double scaled = prob * std::ldexp(1.0, gen.instance.unregistered.voter_count());
        CHECK(scaled == doctest::Approx(static_cast<double>(alpha)).epsilon(1e-6));
    }
}

TEST_CASE("random instances") {
    auto empty = random_instance(3, 0, ProbMode::uniform(), 1);
    CHECK(empty.voter_count() == 0);

    auto sure = random_instance(3, 5, ProbMode::fixed(1.0), 2);
    for (double p : sure.probs()) CHECK(p == 1.0);

    auto a = random_instance(4, 7, ProbMode::uniform(), 33);
    auto b = random_instance(4, 7, ProbMode::uniform(), 33);
    CHECK(a.probs() == b.probs());
    for (int v = 0; v < 7; ++v) CHECK(a.profile().ranking(v).order == b.profile().ranking(v).order);

    auto mixed = random_instance(2, 40, ProbMode::mixed_with_ones(), 5);
    int ones = 0, interior = 0;
    for (double p : mixed.probs()) (p == 1.0 ? ones : interior)++;
    CHECK(ones > 0);
    CHECK(interior > 0);

    CHECK_THROWS_AS(random_instance(0, 3, ProbMode::uniform(), 1), ValidationError);
    CHECK_THROWS_AS(ProbMode::fixed(1.0001), ValidationError);
}
