#ifndef WINPROB_EXACT_HPP
#define WINPROB_EXACT_HPP

#include <vector>

#include "winprob/rules.hpp"
#include "winprob/types.hpp"
#include "winprob/winners.hpp"

namespace winprob {

// Distribution of the number of attending voters from a marked set;
// probs[y] = Pr[exactly y marked voters attend], indexed y = 0..n.
struct CountDistribution {
    std::vector<double> probs;

    double pr_eq(int y) const;
    double pr_le(int y) const; // Pr[count <= y]
    double pr_ge(int y) const; // Pr[count >= y]
};

// Pr[exactly the voters in `subset` attend] = prod_{i in U} p_i *
// prod_{i not in U} (1 - p_i).
double subset_probability(const ProbabilisticProfile& pp, const std::vector<int>& subset);

// Distribution of |I ∩ marked| computed by the one-voter-at-a-time DP;
// voters outside `marked` do not affect the count.
CountDistribution marginal_count_dist(const ProbabilisticProfile& pp, const std::vector<int>& marked);

// Exact winning probability under plurality. Per-candidate top-position
// counts are independent, so Pr[win] = sum_s Pr[s(c)=s] * prod_{c'!=c}
// Pr[s(c') <= s] (co-winner) or Pr[s(c') <= s-1] (unique).
double win_prob_plurality(const ProbabilisticProfile& pp, int candidate, WinnerSemantics semantics);

// Exact winning probability under veto, via bottom-position counts:
// Pr[win] = sum_b Pr[b(c)=b] * prod_{c'!=c} Pr[b(c') >= b] (co-winner)
// or Pr[b(c') >= b+1] (unique).
double win_prob_veto(const ProbabilisticProfile& pp, int candidate, WinnerSemantics semantics);

inline constexpr int kDefaultBruteForceLimit = 20;

// Exact winning probability by enumerating all 2^n attendance subsets.
// Refuses instances with more than `limit` voters.
double brute_force_win_prob(const ProbabilisticProfile& pp, const Rule& rule, int candidate,
                            WinnerSemantics semantics, int limit = kDefaultBruteForceLimit);

// 1 - brute_force_win_prob.
double brute_force_lose_prob(const ProbabilisticProfile& pp, const Rule& rule, int candidate,
                             WinnerSemantics semantics, int limit = kDefaultBruteForceLimit);

} // namespace winprob

#endif
