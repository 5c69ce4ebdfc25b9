#include "winprob/generators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "winprob/errors.hpp"
#include "winprob/rng.hpp"

namespace winprob {

Graph::Graph(int vertex_count_in, std::vector<std::pair<int, int>> edges_in)
    : vertex_count(vertex_count_in), edges(std::move(edges_in)) {
    if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw ValidationError("duplicate edge");
    }
}

SetSystem::SetSystem(int universe_size_in, std::vector<std::array<int, 3>> sets_in)
    : universe_size(universe_size_in), sets(std::move(sets_in)) {
    if (universe_size < 3 || universe_size % 3 != 0)
        throw ValidationError("universe size must be a positive multiple of 3");
    std::set<std::array<int, 3>> seen;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (s[0] < 0 || s[2] >= universe_size) throw ValidationError("set element out of range");
        if (s[0] == s[1] || s[1] == s[2])
            throw ValidationError("sets must contain 3 distinct elements");
        if (!seen.insert(s).second) throw ValidationError("duplicate set");
    }
}

Ranking block_order(int candidate_count, const std::vector<std::vector<int>>& blocks) {
    std::vector<char> seen(static_cast<std::size_t>(candidate_count), 0);
    Ranking ranking;
    ranking.order.reserve(static_cast<std::size_t>(candidate_count));
    for (const auto& block : blocks) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (int c : sorted) {
            if (c < 0 || c >= candidate_count)
                throw ValidationError("block candidate index out of range");
            if (seen[static_cast<std::size_t>(c)]++)
                throw ValidationError("blocks must be disjoint");
            ranking.order.push_back(c);
        }
    }
    if (ranking.size() != candidate_count)
        throw ValidationError("blocks must cover every candidate");
    return ranking;
}

namespace {

std::vector<int> complement(int m, const std::vector<int>& inside) {
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    for (int c : inside) in[static_cast<std::size_t>(c)] = 1;
    std::vector<int> out;
    for (int c = 0; c < m; ++c)
        if (!in[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

} // namespace

GeneratedInstance gen_kapproval_from_matching(const Graph& graph, int k) {
    if (k < 2) throw ValidationError("the matching construction requires k >= 2");
    if (graph.vertex_count < 1) throw ValidationError("the graph needs at least one vertex");
    const int nv = graph.vertex_count;
    const int ne = static_cast<int>(graph.edges.size());
    const int fillers_per_block = k - 2;

    // candidates: vertices, then c, d, then filler blocks F_0..F_ne
    std::vector<std::string> names;
    for (int u = 0; u < nv; ++u) names.push_back("u" + std::to_string(u));
    const int cand_c = nv;
    const int cand_d = nv + 1;
    names.push_back("c");
    names.push_back("d");
    auto filler_block = [&](int i) {
        std::vector<int> block;
        for (int j = 0; j < fillers_per_block; ++j)
            block.push_back(nv + 2 + i * fillers_per_block + j);
        return block;
    };
    for (int i = 0; i <= ne; ++i)
        for (int j = 0; j < fillers_per_block; ++j)
            names.push_back("f" + std::to_string(i) + "_" + std::to_string(j + 1));
    const int m = static_cast<int>(names.size());

    // M: single voter approving {c, d} and the F_0 fillers
    std::vector<int> top = {cand_c, cand_d};
    auto f0 = filler_block(0);
    top.insert(top.end(), f0.begin(), f0.end());
    std::vector<Ranking> registered = {block_order(m, {top, complement(m, top)})};

    // Q_i approves both endpoints of e_i and the F_i fillers
    std::vector<Ranking> unregistered;
    for (int i = 0; i < ne; ++i) {
        std::vector<int> block = {graph.edges[static_cast<std::size_t>(i)].first,
                                  graph.edges[static_cast<std::size_t>(i)].second};
        auto fi = filler_block(i + 1);
        block.insert(block.end(), fi.begin(), fi.end());
        unregistered.push_back(block_order(m, {block, complement(m, block)}));
    }

    CcauvInstance instance(CandidateSet(std::move(names)), Profile(m, std::move(registered)),
                           Profile(m, std::move(unregistered)), cand_c);
    return {std::move(instance), Rule::k_approval(k), "matchings", ""};
}

GeneratedInstance gen_kveto_from_edgecover(const Graph& graph, int k) {
    if (k < 2) throw ValidationError("the edge-cover construction requires k >= 2");
    if (graph.vertex_count < 1) throw ValidationError("the graph needs at least one vertex");
    const int nv = graph.vertex_count;

    std::vector<std::string> names;
    for (int u = 0; u < nv; ++u) names.push_back("u" + std::to_string(u));
    const int cand_c = nv;
    const int cand_d = nv + 1;
    names.push_back("c");
    names.push_back("d");
    std::vector<int> fillers;
    for (int j = 0; j < k - 2; ++j) {
        fillers.push_back(nv + 2 + j);
        names.push_back("f" + std::to_string(j + 1));
    }
    const int m = static_cast<int>(names.size());

    // M vetoes {c, d} and the fillers
    std::vector<int> bottom = {cand_c, cand_d};
    bottom.insert(bottom.end(), fillers.begin(), fillers.end());
    std::vector<Ranking> registered = {block_order(m, {complement(m, bottom), bottom})};

    // Q_i vetoes both endpoints of e_i and the fillers
    std::vector<Ranking> unregistered;
    for (const auto& [u, v] : graph.edges) {
        std::vector<int> block = {u, v};
        block.insert(block.end(), fillers.begin(), fillers.end());
        unregistered.push_back(block_order(m, {complement(m, block), block}));
    }

    std::vector<char> covered(static_cast<std::size_t>(nv), 0);
    for (const auto& [u, v] : graph.edges) {
        covered[static_cast<std::size_t>(u)] = 1;
        covered[static_cast<std::size_t>(v)] = 1;
    }
    std::string note;
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        note = "graph has isolated vertices; the edge-cover count is 0";

    CcauvInstance instance(CandidateSet(std::move(names)), Profile(m, std::move(registered)),
                           Profile(m, std::move(unregistered)), cand_c);
    return {std::move(instance), Rule::k_veto(k), "edge-covers", std::move(note)};
}

namespace {

// The Condorcet construction is only faithful for q >= 3 (with fewer
// registered voters the empty sublist is a spurious witness), so smaller
// systems are padded with two disjoint fresh triples, which leaves the
// exact-cover count unchanged.
SetSystem pad_to_min_q(const SetSystem& system, bool* padded) {
    *padded = false;
    if (system.q() >= 3) return system;
    *padded = true;
    const int base = system.universe_size;
    std::vector<std::array<int, 3>> sets = system.sets;
    sets.push_back({base, base + 1, base + 2});
    sets.push_back({base + 3, base + 4, base + 5});
    return SetSystem(base + 6, std::move(sets));
}

} // namespace

GeneratedInstance gen_condorcet_from_x3c(const SetSystem& input) {
    bool padded = false;
    SetSystem system = pad_to_min_q(input, &padded);
    const int q = system.q();
    const int nu = system.universe_size;

    std::vector<std::string> names;
    for (int u = 0; u < nu; ++u) names.push_back("u" + std::to_string(u));
    const int cand_c = nu;
    const int cand_d = nu + 1;
    names.push_back("c");
    names.push_back("d");
    const int m = nu + 2;

    std::vector<int> universe(static_cast<std::size_t>(nu));
    std::iota(universe.begin(), universe.end(), 0);

    std::vector<Ranking> registered;
    for (int i = 0; i < q - 1; ++i)
        registered.push_back(block_order(m, {universe, {cand_c}, {cand_d}}));
    for (int i = 0; i < 2; ++i)
        registered.push_back(block_order(m, {{cand_c}, {cand_d}, universe}));

    std::vector<Ranking> unregistered;
    for (const auto& s : system.sets) {
        std::vector<int> inside(s.begin(), s.end());
        std::vector<int> rest;
        for (int u : universe)
            if (std::find(inside.begin(), inside.end(), u) == inside.end()) rest.push_back(u);
        unregistered.push_back(block_order(m, {inside, {cand_d}, {cand_c}, rest}));
    }

    CcauvInstance instance(CandidateSet(std::move(names)), Profile(m, std::move(registered)),
                           Profile(m, std::move(unregistered)), cand_c);
    std::string note = padded ? "input padded with two fresh disjoint triples (q < 3)" : "";
    return {std::move(instance), Rule::condorcet(), "exact-covers", std::move(note)};
}

GeneratedInstance gen_maximin_from_x3c(const SetSystem& system) {
    const int q = system.q();
    const int nu = system.universe_size;

    std::vector<std::string> names;
    for (int u = 0; u < nu; ++u) names.push_back("u" + std::to_string(u));
    const int cand_c = nu;
    const int cand_d = nu + 1;
    const int cand_w = nu + 2;
    names.push_back("c");
    names.push_back("d");
    names.push_back("w");
    const int m = nu + 3;

    std::vector<int> universe(static_cast<std::size_t>(nu));
    std::iota(universe.begin(), universe.end(), 0);

    std::vector<Ranking> registered;
    for (int i = 0; i < q; ++i)
        registered.push_back(block_order(m, {{cand_c}, {cand_d}, universe, {cand_w}}));
    for (int i = 0; i < q - 1; ++i)
        registered.push_back(block_order(m, {{cand_c}, universe, {cand_w}, {cand_d}}));
    registered.push_back(block_order(m, {universe, {cand_c}, {cand_w}, {cand_d}}));
    for (int i = 0; i < 2 * q; ++i)
        registered.push_back(block_order(m, {{cand_d}, {cand_w}, universe, {cand_c}}));

    std::vector<Ranking> unregistered;
    for (const auto& s : system.sets) {
        std::vector<int> inside(s.begin(), s.end());
        std::vector<int> rest;
        for (int u : universe)
            if (std::find(inside.begin(), inside.end(), u) == inside.end()) rest.push_back(u);
        unregistered.push_back(block_order(m, {{cand_w}, rest, {cand_c}, inside, {cand_d}}));
    }

    CcauvInstance instance(CandidateSet(std::move(names)), Profile(m, std::move(registered)),
                           Profile(m, std::move(unregistered)), cand_c);
    return {std::move(instance), Rule::maximin(), "exact-covers", ""};
}

namespace {

void check_count_limit(std::size_t count, int limit, const char* what) {
    if (static_cast<long long>(count) > limit)
        throw RefusalError(std::string(what) + " refused: " + std::to_string(count) +
                           " items exceeds limit " + std::to_string(limit));
}

} // namespace

unsigned long long count_matchings_brute(const Graph& graph, int limit) {
    check_count_limit(graph.edges.size(), limit, "count_matchings_brute");
    const int ne = static_cast<int>(graph.edges.size());
    unsigned long long count = 0;
    std::vector<int> degree(static_cast<std::size_t>(graph.vertex_count), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        bool ok = true;
        for (int i = 0; i < ne && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& [u, v] = graph.edges[static_cast<std::size_t>(i)];
            if (++degree[static_cast<std::size_t>(u)] > 1 || ++degree[static_cast<std::size_t>(v)] > 1)
                ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

unsigned long long count_edge_covers_brute(const Graph& graph, int limit) {
    check_count_limit(graph.edges.size(), limit, "count_edge_covers_brute");
    const int ne = static_cast<int>(graph.edges.size());
    unsigned long long count = 0;
    std::vector<char> covered(static_cast<std::size_t>(graph.vertex_count), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
        std::fill(covered.begin(), covered.end(), 0);
        for (int i = 0; i < ne; ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& [u, v] = graph.edges[static_cast<std::size_t>(i)];
            covered[static_cast<std::size_t>(u)] = 1;
            covered[static_cast<std::size_t>(v)] = 1;
        }
        if (std::find(covered.begin(), covered.end(), 0) == covered.end()) ++count;
    }
    return count;
}

unsigned long long count_exact_covers_brute(const SetSystem& system, int limit) {
    check_count_limit(system.sets.size(), limit, "count_exact_covers_brute");
    const int ns = static_cast<int>(system.sets.size());
    const int q = system.q();
    unsigned long long count = 0;
    std::vector<int> hits(static_cast<std::size_t>(system.universe_size), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ns); ++mask) {
        if (std::popcount(mask) != q) continue;
        std::fill(hits.begin(), hits.end(), 0);
        bool disjoint = true;
        for (int i = 0; i < ns && disjoint; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int u : system.sets[static_cast<std::size_t>(i)])
                if (++hits[static_cast<std::size_t>(u)] > 1) disjoint = false;
        }
        if (disjoint) ++count; // q disjoint triples necessarily cover all 3q elements
    }
    return count;
}

ProbMode ProbMode::fixed(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("fixed probability outside [0,1]");
    return {Kind::Fixed, p};
}

ProbabilisticProfile random_instance(int m, int n, const ProbMode& mode, std::uint64_t seed) {
    if (m < 1) throw ValidationError("candidate count must be at least 1");
    if (n < 0) throw ValidationError("voter count must be non-negative");
    RngStream rng(seed);
    std::vector<Ranking> rankings;
    rankings.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Ranking ranking;
        ranking.order.resize(static_cast<std::size_t>(m));
        std::iota(ranking.order.begin(), ranking.order.end(), 0);
        for (int i = m - 1; i > 0; --i)
            std::swap(ranking.order[static_cast<std::size_t>(i)],
                      ranking.order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
        rankings.push_back(std::move(ranking));
    }
    std::vector<double> probs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        switch (mode.kind) {
        case ProbMode::Kind::Uniform: probs[static_cast<std::size_t>(v)] = rng.uniform(); break;
        case ProbMode::Kind::Fixed: probs[static_cast<std::size_t>(v)] = mode.fixed_p; break;
        case ProbMode::Kind::MixedWithOnes:
            probs[static_cast<std::size_t>(v)] = rng.uniform() < 0.5 ? 1.0 : rng.uniform();
            break;
        }
    }
    return ProbabilisticProfile(Profile(m, std::move(rankings)), std::move(probs));
}

} // namespace winprob
