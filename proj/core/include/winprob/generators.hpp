#ifndef WINPROB_GENERATORS_HPP
#define WINPROB_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "winprob/ccauv.hpp"
#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob {

// Simple undirected graph: no self-loops, no duplicate edges.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);
};

// Collection of 3-element subsets of a universe {0..3q-1}; duplicates are
// rejected.
struct SetSystem {
    int universe_size = 0; // 3q
    std::vector<std::array<int, 3>> sets;

    SetSystem(int universe_size, std::vector<std::array<int, 3>> sets);
    int q() const { return universe_size / 3; }
};

// A control instance produced by a reduction, together with the rule it is
// built for and the combinatorial quantity its witness count equals.
struct GeneratedInstance {
    CcauvInstance instance;
    Rule rule;
    std::string count_kind; // "matchings" | "edge-covers" | "exact-covers"
    std::string note;       // non-empty for degenerate inputs
};

// Ranking that lists the given candidate blocks in order, each block in
// ascending index order. The blocks must partition the candidate set.
Ranking block_order(int candidate_count, const std::vector<std::vector<int>>& blocks);

// k-approval control instance whose witness count equals the number of
// (not necessarily perfect) matchings of G. Requires k >= 2 and at least
// one vertex.
GeneratedInstance gen_kapproval_from_matching(const Graph& graph, int k);

// k-veto control instance whose witness count equals the number of edge
// covers of G. Requires k >= 2 and at least one vertex; isolated vertices
// are permitted (the count is then 0) and flagged in the note.
GeneratedInstance gen_kveto_from_edgecover(const Graph& graph, int k);

// Condorcet control instance whose witness count equals the number of
// exact covers of the set system (q pairwise-disjoint sets covering the
// universe). Systems with q < 3 are padded with two disjoint fresh triples
// before the construction, which preserves the exact-cover count.
GeneratedInstance gen_condorcet_from_x3c(const SetSystem& system);

// Maximin control instance with the same exact-cover witness count.
GeneratedInstance gen_maximin_from_x3c(const SetSystem& system);

inline constexpr int kDefaultCountLimit = 20;

// Counting oracles by subset enumeration; refuse above `limit` edges/sets.
unsigned long long count_matchings_brute(const Graph& graph, int limit = kDefaultCountLimit);
unsigned long long count_edge_covers_brute(const Graph& graph, int limit = kDefaultCountLimit);
unsigned long long count_exact_covers_brute(const SetSystem& system, int limit = kDefaultCountLimit);

// Attendance-probability modes for random instances.
struct ProbMode {
    enum class Kind { Uniform, Fixed, MixedWithOnes };
    Kind kind = Kind::Uniform;
    double fixed_p = 0.5;

    static ProbMode uniform() { return {Kind::Uniform, 0.0}; }
    static ProbMode fixed(double p);
    // Each voter gets probability 1 with chance 1/2, otherwise uniform(0,1);
    // exercises the mandatory-voter code paths.
    static ProbMode mixed_with_ones() { return {Kind::MixedWithOnes, 0.0}; }
};

// n uniform-random rankings over m candidates with probabilities drawn per
// mode; deterministic for a fixed seed.
ProbabilisticProfile random_instance(int m, int n, const ProbMode& mode, std::uint64_t seed);

} // namespace winprob

#endif
