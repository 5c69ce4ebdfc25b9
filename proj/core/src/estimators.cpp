#include "winprob/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "event_margins.hpp"
#include "subset_eval.hpp"
#include "winprob/errors.hpp"
#include "winprob/winners.hpp"

namespace winprob {

const char* method_name(EstimateMethod method) {
    switch (method) {
    case EstimateMethod::Klm: return "klm";
    case EstimateMethod::McAdditive: return "mc-additive";
    case EstimateMethod::ExactShortcut: return "exact-shortcut";
    }
    return "?";
}

namespace {

void check_config(const EstimatorConfig& config) {
    if (!(config.epsilon > 0.0 && config.epsilon < 1.0))
        throw ValidationError("epsilon must lie in (0,1)");
    if (!(config.delta > 0.0 && config.delta < 1.0))
        throw ValidationError("delta must lie in (0,1)");
    if (config.trials_override && *config.trials_override < 1)
        throw ValidationError("trials override must be at least 1");
}

// Conditional-probability model of one lose event. A suffix table
// N(t, y) = Pr[sum_{i >= t, i in I} x_i > y] answers every prefix
// conditional the sampler needs in O(1) after an O(n * width) build.
class LoseEventModel {
public:
    LoseEventModel(const ProbabilisticProfile& pp, const Rule& rule, const LoseEvent& event)
        : ps_(pp.probs()) {
        detail::EventMargins em = detail::event_margins(pp, rule, event);
        xs_ = std::move(em.xs);
        theta_ = em.theta;
        n_ = static_cast<int>(xs_.size());

        lo_ = 0;
        hi_ = 0;
        for (Score x : xs_) (x < 0 ? lo_ : hi_) += x;
        width_ = hi_ - lo_ + 1;
        const long long cells = width_ * (static_cast<long long>(n_) + 1);
        if (cells > kConditionalTableBudget)
            throw RefusalError("margin DP refused: table of " + std::to_string(cells) +
                               " cells exceeds budget " + std::to_string(kConditionalTableBudget));

        table_.assign(static_cast<std::size_t>(cells), 0.0);
        for (Score y = lo_; y <= hi_; ++y)
            at(n_, y) = y < 0 ? 1.0 : 0.0;
        for (int t = n_ - 1; t >= 0; --t) {
            const Score x = xs_[static_cast<std::size_t>(t)];
            const double p = ps_[static_cast<std::size_t>(t)];
            for (Score y = lo_; y <= hi_; ++y)
                at(t, y) = p * lookup(t + 1, y - x) + (1.0 - p) * lookup(t + 1, y);
        }
    }

    int voter_count() const { return n_; }

    // Pr[event | attendance of voters 0..t-1 fixed with margin contribution d]
    double conditional_prefix(int t, Score d) const { return lookup(t, theta_ - d); }

    double probability() const { return conditional_prefix(0, 0); }

    Score margin(int voter) const { return xs_[static_cast<std::size_t>(voter)]; }
    double attend_prob(int voter) const { return ps_[static_cast<std::size_t>(voter)]; }

    bool holds_on(const std::vector<char>& present) const {
        Score sum = 0;
        for (int v = 0; v < n_; ++v)
            if (present[static_cast<std::size_t>(v)]) sum += xs_[static_cast<std::size_t>(v)];
        return sum > theta_;
    }

private:
    double& at(int t, Score y) {
        return table_[static_cast<std::size_t>(t) * static_cast<std::size_t>(width_) +
                      static_cast<std::size_t>(y - lo_)];
    }
    double lookup(int t, Score y) const {
        if (y < lo_) return 1.0;
        if (y > hi_) return 0.0;
        return table_[static_cast<std::size_t>(t) * static_cast<std::size_t>(width_) +
                      static_cast<std::size_t>(y - lo_)];
    }

    std::vector<Score> xs_;
    std::vector<double> ps_;
    Score theta_ = 0;
    Score lo_ = 0, hi_ = 0;
    long long width_ = 1;
    int n_ = 0;
    std::vector<double> table_;
};

// One step of the posterior construction: the inclusion probability of
// voter i given the event and the attendance of voters 0..i-1.
double step_probability(const LoseEventModel& model, int voter, Score margin_so_far,
                        double denom, double* with_out, double* without_out) {
    const double with_i = model.conditional_prefix(voter + 1, margin_so_far + model.margin(voter));
    const double without_i = model.conditional_prefix(voter + 1, margin_so_far);
    *with_out = with_i;
    *without_out = without_i;
    if (with_i == 0.0) return 0.0;
    if (without_i == 0.0) return 1.0;
    return std::clamp(model.attend_prob(voter) * with_i / denom, 0.0, 1.0);
}

std::vector<int> sample_from_model(const LoseEventModel& model, RngStream& rng) {
    std::vector<int> chosen;
    Score margin = 0;
    double denom = model.probability();
    for (int i = 0; i < model.voter_count(); ++i) {
        double with_i = 0.0, without_i = 0.0;
        const double q = step_probability(model, i, margin, denom, &with_i, &without_i);
        if (rng.uniform() < q) {
            chosen.push_back(i);
            margin += model.margin(i);
            denom = with_i;
        } else {
            denom = without_i;
        }
    }
    return chosen;
}

double path_probability_from_model(const LoseEventModel& model, const std::vector<char>& in_subset) {
    double prob = 1.0;
    Score margin = 0;
    double denom = model.probability();
    for (int i = 0; i < model.voter_count(); ++i) {
        double with_i = 0.0, without_i = 0.0;
        const double q = step_probability(model, i, margin, denom, &with_i, &without_i);
        if (in_subset[static_cast<std::size_t>(i)]) {
            prob *= q;
            margin += model.margin(i);
            denom = with_i;
        } else {
            prob *= 1.0 - q;
            denom = without_i;
        }
        if (prob == 0.0) return 0.0;
    }
    return prob;
}

std::vector<char> membership_flags(const std::vector<int>& subset, int n, const char* what) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : subset) {
        if (v < 0 || v >= n)
            throw ValidationError(std::string(what) + ": voter index out of range");
        if (in[static_cast<std::size_t>(v)])
            throw ValidationError(std::string(what) + ": duplicate voter index");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

} // namespace

std::vector<int> sample_posterior(const ProbabilisticProfile& pp, const Rule& rule,
                                  const LoseEvent& event, RngStream& rng) {
    LoseEventModel model(pp, rule, event);
    if (model.probability() <= 0.0)
        throw ValidationError("sample_posterior requires an event of positive probability");
    return sample_from_model(model, rng);
}

double posterior_path_probability(const ProbabilisticProfile& pp, const Rule& rule,
                                  const LoseEvent& event, const std::vector<int>& subset) {
    LoseEventModel model(pp, rule, event);
    if (model.probability() <= 0.0)
        throw ValidationError("posterior_path_probability requires an event of positive probability");
    return path_probability_from_model(model,
                                       membership_flags(subset, pp.voter_count(), "posterior subset"));
}

long long klm_trial_count(int positive_events, double epsilon, double delta) {
    const double t = 3.0 * positive_events * std::log(2.0 / delta) / (epsilon * epsilon);
    return std::max<long long>(1, static_cast<long long>(std::ceil(t)));
}

long long additive_trial_count(double epsilon, double delta) {
    const double t = std::log(2.0 / delta) / (2.0 * epsilon * epsilon);
    return std::max<long long>(1, static_cast<long long>(std::ceil(t)));
}

Estimate klm_lose_prob(const ProbabilisticProfile& pp, const Rule& rule, int target,
                       const EstimatorConfig& config) {
    check_config(config);
    const int m = pp.candidate_count();
    if (target < 0 || target >= m) throw ValidationError("candidate index out of range");
    if (rule.kind() == Rule::Kind::Maximin)
        throw UnsupportedRuleError("no FPRAS implemented for Maximin (open problem)");
    const LoseEventKind kind = rule.is_positional() ? LoseEventKind::PositionalStrict
                                                    : LoseEventKind::CondorcetTieOrBeat;

    // one lose event per rival, in candidate order
    std::vector<LoseEventModel> models;
    models.reserve(static_cast<std::size_t>(m) - 1);
    for (int d = 0; d < m; ++d) {
        if (d == target) continue;
        try {
            models.emplace_back(pp, rule, LoseEvent{target, d, kind});
        } catch (const RefusalError& e) {
            // the table budget is the operational form of the
            // polynomial-score requirement
            throw UnsupportedRuleError(std::string("scores violate the polynomial-score "
                                                   "requirement: ") +
                                       e.what());
        }
    }

    std::vector<double> weights(models.size());
    double total_weight = 0.0;
    int positive = 0;
    for (std::size_t e = 0; e < models.size(); ++e) {
        weights[e] = models[e].probability();
        total_weight += weights[e];
        if (weights[e] > 0.0) ++positive;
    }

    Estimate est;
    est.config = config;
    if (total_weight == 0.0) {
        est.value = 0.0;
        est.trials = 0;
        est.method = EstimateMethod::ExactShortcut;
        return est;
    }

    const long long trials =
        config.trials_override.value_or(klm_trial_count(positive, config.epsilon, config.delta));
    long long hits = 0;
    std::vector<char> present(static_cast<std::size_t>(pp.voter_count()), 0);
    for (long long trial = 0; trial < trials; ++trial) {
        RngStream rng = RngStream::derived(config.seed, static_cast<std::uint64_t>(trial));
        // draw an event with probability proportional to its weight
        const double target_mass = rng.uniform() * total_weight;
        std::size_t chosen = 0;
        double acc = 0.0;
        for (std::size_t e = 0; e < models.size(); ++e) {
            if (weights[e] <= 0.0) continue;
            acc += weights[e];
            chosen = e;
            if (target_mass < acc) break;
        }
        // draw an outcome from the posterior of the chosen event
        std::vector<int> subset = sample_from_model(models[chosen], rng);
        std::fill(present.begin(), present.end(), 0);
        for (int v : subset) present[static_cast<std::size_t>(v)] = 1;
        // count the outcome only at its canonical (smallest-rival) event
        std::size_t canonical = models.size();
        for (std::size_t e = 0; e < models.size(); ++e) {
            if (models[e].holds_on(present)) {
                canonical = e;
                break;
            }
        }
        if (canonical == chosen) ++hits;
    }

    est.value = std::min(1.0, total_weight * static_cast<double>(hits) / static_cast<double>(trials));
    est.trials = trials;
    est.method = EstimateMethod::Klm;
    return est;
}

Estimate mc_win_prob_additive(const ProbabilisticProfile& pp, const Rule& rule, int target,
                              WinnerSemantics semantics, const EstimatorConfig& config) {
    check_config(config);
    const int m = pp.candidate_count();
    const int n = pp.voter_count();
    if (target < 0 || target >= m) throw ValidationError("candidate index out of range");
    if (rule.is_positional()) rule.score_vector(m); // fail fast on bad parameters

    const long long trials =
        config.trials_override.value_or(additive_trial_count(config.epsilon, config.delta));
    detail::SubsetWinnerEval eval(rule, Profile(m, {}), pp.profile());
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    long long successes = 0;
    for (long long trial = 0; trial < trials; ++trial) {
        RngStream rng = RngStream::derived(config.seed, static_cast<std::uint64_t>(trial));
        for (int v = 0; v < n; ++v) {
            const bool attend = rng.uniform() < pp.prob(v);
            if (attend != static_cast<bool>(present[static_cast<std::size_t>(v)])) {
                eval.toggle(v);
                present[static_cast<std::size_t>(v)] = attend;
            }
        }
        if (eval.is_winner(target, semantics)) ++successes;
    }

    Estimate est;
    est.value = static_cast<double>(successes) / static_cast<double>(trials);
    est.trials = trials;
    est.method = EstimateMethod::McAdditive;
    est.config = config;
    return est;
}

} // namespace winprob
