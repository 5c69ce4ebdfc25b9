#ifndef WINPROB_CONDITIONAL_HPP
#define WINPROB_CONDITIONAL_HPP

#include <vector>

#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob {

// The atom of the losing union: rival d outscores the target c
// (positional, strict) or ties-or-beats it pairwise (Condorcet, weak).
enum class LoseEventKind { PositionalStrict, CondorcetTieOrBeat };

struct LoseEvent {
    int target; // c
    int rival;  // d != c
    LoseEventKind kind;
};

// A conditioning event I ∩ S = S': the voters in `decided` have a fixed
// attendance, and `present` (a subset of decided) lists those who attend.
struct PartialAssignment {
    std::vector<int> decided; // S
    std::vector<int> present; // S' ⊆ S

    static PartialAssignment none() { return {}; }
};

// Per-voter score margins x_i = s(T_i, a) - s(T_i, b). Requires a != b and
// a positional rule.
std::vector<Score> pairwise_margin_values(const Rule& rule, const Profile& profile, int a, int b);

// Table budget for the margin DPs, in cells; enforces the polynomial-score
// requirement operationally.
inline constexpr long long kConditionalTableBudget = 100'000'000;

// Pr[s(T', d) > s(T', c) | I ∩ S = S'] for a positional rule, by the
// shifted-margin DP over the undecided voters. Refuses when the table
// budget is exceeded.
double exceed_prob_positional(const ProbabilisticProfile& pp, const Rule& rule,
                              const LoseEvent& event, const PartialAssignment& assign);

// Pr[N_{T'}(d, c) >= N_{T'}(c, d) | I ∩ S = S'] via the ±1 margin DP.
double tie_or_beat_prob_condorcet(const ProbabilisticProfile& pp, const LoseEvent& event,
                                  const PartialAssignment& assign);

// Unconditional event probability: dispatches with S = S' = ∅. The event
// kind must be consistent with the rule.
double event_prob(const ProbabilisticProfile& pp, const Rule& rule, const LoseEvent& event);

} // namespace winprob

#endif
