#ifndef WINPROB_ESTIMATORS_HPP
#define WINPROB_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "winprob/conditional.hpp"
#include "winprob/rng.hpp"
#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob {

struct EstimatorConfig {
    double epsilon = 0.1;  // error target, in (0,1)
    double delta = 0.05;   // failure probability, in (0,1)
    std::uint64_t seed = 0;
    std::optional<long long> trials_override;
};

enum class EstimateMethod { Klm, McAdditive, ExactShortcut };

struct Estimate {
    double value = 0.0;
    long long trials = 0;
    EstimateMethod method = EstimateMethod::ExactShortcut;
    EstimatorConfig config;
};

const char* method_name(EstimateMethod method);

// One draw from the posterior distribution of the attending set I
// conditioned on the lose event, built voter by voter from the conditional
// DPs. Requires event_prob > 0. Returns the sampled voter-index set.
std::vector<int> sample_posterior(const ProbabilisticProfile& pp, const Rule& rule,
                                  const LoseEvent& event, RngStream& rng);

// Probability that the posterior sampler outputs exactly `subset`;
// equals Pr[I = U ∧ event] / Pr[event].
double posterior_path_probability(const ProbabilisticProfile& pp, const Rule& rule,
                                  const LoseEvent& event, const std::vector<int>& subset);

// Trial count for the union estimator: ceil(3 * k * ln(2/delta) / eps^2)
// for k positive-weight events (standard multiplicative Chernoff bound,
// per-trial mean >= 1/k).
long long klm_trial_count(int positive_events, double epsilon, double delta);

// Trial count for the additive estimator: ceil(ln(2/delta) / (2 eps^2))
// (Hoeffding).
long long additive_trial_count(double epsilon, double delta);

// Multiplicative (epsilon, delta) estimate of Pr[target loses] under a
// positional rule with polynomial scores or under Condorcet, by the
// union-of-events sampling scheme over the per-rival lose events.
// Returns an exact 0 (method = ExactShortcut) when every event has weight 0.
Estimate klm_lose_prob(const ProbabilisticProfile& pp, const Rule& rule, int target,
                       const EstimatorConfig& config);

// Additive (epsilon, delta) estimate of Pr[target wins] by direct profile
// sampling; works for every supported rule, including Maximin.
Estimate mc_win_prob_additive(const ProbabilisticProfile& pp, const Rule& rule, int target,
                              WinnerSemantics semantics, const EstimatorConfig& config);

} // namespace winprob

#endif
