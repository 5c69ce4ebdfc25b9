#include "winprob/conditional.hpp"

#include <algorithm>

#include "event_margins.hpp"
#include "winprob/errors.hpp"

namespace winprob {

std::vector<Score> pairwise_margin_values(const Rule& rule, const Profile& profile, int a, int b) {
    const int m = profile.candidate_count();
    if (a < 0 || a >= m || b < 0 || b >= m) throw ValidationError("candidate index out of range");
    if (a == b) throw ValidationError("margin values require two distinct candidates");
    ScoreVector sv = rule.score_vector(m); // throws for non-positional rules
    std::vector<Score> xs;
    xs.reserve(static_cast<std::size_t>(profile.voter_count()));
    for (const Ranking& ranking : profile.rankings()) {
        auto pos = ranking.positions();
        xs.push_back(sv.at(pos[static_cast<std::size_t>(a)]) - sv.at(pos[static_cast<std::size_t>(b)]));
    }
    return xs;
}

namespace detail {

// Pr[sum_{i in I} x_i > threshold] where voter i is in I independently
// with probability p_i. Table rows are indexed by the shifted margin
// y - A with A = sum of negative x_i and B = sum of positive x_i; lookups
// below A are 1 (the sum always exceeds y) and above B are 0.
double exceed_tail_probability(const std::vector<Score>& xs, const std::vector<double>& ps,
                               Score threshold) {
    const std::size_t k = xs.size();
    Score lo = 0, hi = 0;
    for (Score x : xs) (x < 0 ? lo : hi) += x;
    if (threshold < lo) return 1.0;
    if (threshold >= hi) return 0.0;

    const long long width = hi - lo + 1;
    if (width * static_cast<long long>(std::max<std::size_t>(k, 1)) > kConditionalTableBudget)
        throw RefusalError("margin DP refused: table of " +
                           std::to_string(width * static_cast<long long>(k)) +
                           " cells exceeds budget " + std::to_string(kConditionalTableBudget));

    std::vector<double> prev(static_cast<std::size_t>(width));
    std::vector<double> cur(static_cast<std::size_t>(width));
    for (long long y = lo; y <= hi; ++y)
        prev[static_cast<std::size_t>(y - lo)] = y < 0 ? 1.0 : 0.0;

    auto lookup = [&](const std::vector<double>& row, Score y) -> double {
        if (y < lo) return 1.0;
        if (y > hi) return 0.0;
        return row[static_cast<std::size_t>(y - lo)];
    };

    for (std::size_t t = 0; t < k; ++t) {
        const Score x = xs[t];
        const double p = ps[t];
        for (Score y = lo; y <= hi; ++y)
            cur[static_cast<std::size_t>(y - lo)] =
                p * lookup(prev, y - x) + (1.0 - p) * lookup(prev, y);
        std::swap(prev, cur);
    }
    return std::clamp(lookup(prev, threshold), 0.0, 1.0);
}

} // namespace detail

namespace {

struct SplitAssignment {
    std::vector<Score> undecided_xs;
    std::vector<double> undecided_ps;
    Score decided_margin = 0; // D = sum of x_i over decided-present voters
};

SplitAssignment split_by_assignment(const std::vector<Score>& xs, const ProbabilisticProfile& pp,
                                    const PartialAssignment& assign) {
    const int n = pp.voter_count();
    std::vector<char> decided(static_cast<std::size_t>(n), 0);
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (int v : assign.decided) {
        if (v < 0 || v >= n) throw ValidationError("decided voter index out of range");
        if (decided[static_cast<std::size_t>(v)]) throw ValidationError("duplicate decided voter index");
        decided[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : assign.present) {
        if (v < 0 || v >= n) throw ValidationError("present voter index out of range");
        if (!decided[static_cast<std::size_t>(v)])
            throw ValidationError("present voters must be a subset of decided voters");
        if (present[static_cast<std::size_t>(v)]) throw ValidationError("duplicate present voter index");
        present[static_cast<std::size_t>(v)] = 1;
    }
    SplitAssignment out;
    for (int v = 0; v < n; ++v) {
        if (decided[static_cast<std::size_t>(v)]) {
            if (present[static_cast<std::size_t>(v)]) out.decided_margin += xs[static_cast<std::size_t>(v)];
        } else {
            out.undecided_xs.push_back(xs[static_cast<std::size_t>(v)]);
            out.undecided_ps.push_back(pp.prob(v));
        }
    }
    return out;
}

void check_event(const LoseEvent& event, int m) {
    if (event.target < 0 || event.target >= m || event.rival < 0 || event.rival >= m)
        throw ValidationError("event candidate index out of range");
    if (event.target == event.rival) throw ValidationError("event target and rival must differ");
}

} // namespace

double exceed_prob_positional(const ProbabilisticProfile& pp, const Rule& rule,
                              const LoseEvent& event, const PartialAssignment& assign) {
    check_event(event, pp.candidate_count());
    if (event.kind != LoseEventKind::PositionalStrict)
        throw ValidationError("exceed_prob_positional requires a PositionalStrict event");
    // margins of the rival over the target: the event is sum_{i in I} x_i > 0
    std::vector<Score> xs = pairwise_margin_values(rule, pp.profile(), event.rival, event.target);
    SplitAssignment split = split_by_assignment(xs, pp, assign);
    return detail::exceed_tail_probability(split.undecided_xs, split.undecided_ps,
                                           -split.decided_margin);
}

double tie_or_beat_prob_condorcet(const ProbabilisticProfile& pp, const LoseEvent& event,
                                  const PartialAssignment& assign) {
    check_event(event, pp.candidate_count());
    if (event.kind != LoseEventKind::CondorcetTieOrBeat)
        throw ValidationError("tie_or_beat_prob_condorcet requires a CondorcetTieOrBeat event");
    const int n = pp.voter_count();
    std::vector<Score> xs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto pos = pp.profile().ranking(v).positions();
        xs[static_cast<std::size_t>(v)] = pos[static_cast<std::size_t>(event.rival)] <
                                                  pos[static_cast<std::size_t>(event.target)]
                                              ? 1
                                              : -1;
    }
    SplitAssignment split = split_by_assignment(xs, pp, assign);
    // weak inequality: sum >= -D  <=>  sum > -D - 1
    return detail::exceed_tail_probability(split.undecided_xs, split.undecided_ps,
                                           -split.decided_margin - 1);
}

double event_prob(const ProbabilisticProfile& pp, const Rule& rule, const LoseEvent& event) {
    switch (event.kind) {
    case LoseEventKind::PositionalStrict:
        if (!rule.is_positional())
            throw ValidationError("PositionalStrict event requires a positional rule");
        return exceed_prob_positional(pp, rule, event, PartialAssignment::none());
    case LoseEventKind::CondorcetTieOrBeat:
        if (rule.kind() != Rule::Kind::Condorcet)
            throw ValidationError("CondorcetTieOrBeat event requires the Condorcet rule");
        return tie_or_beat_prob_condorcet(pp, event, PartialAssignment::none());
    }
    throw ValidationError("unknown event kind");
}

namespace detail {

EventMargins event_margins(const ProbabilisticProfile& pp, const Rule& rule,
                           const LoseEvent& event) {
    check_event(event, pp.candidate_count());
    EventMargins out;
    switch (event.kind) {
    case LoseEventKind::PositionalStrict: {
        if (!rule.is_positional())
            throw ValidationError("PositionalStrict event requires a positional rule");
        out.xs = pairwise_margin_values(rule, pp.profile(), event.rival, event.target);
        out.theta = 0;
        return out;
    }
    case LoseEventKind::CondorcetTieOrBeat: {
        if (rule.kind() != Rule::Kind::Condorcet)
            throw ValidationError("CondorcetTieOrBeat event requires the Condorcet rule");
        const int n = pp.voter_count();
        out.xs.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto pos = pp.profile().ranking(v).positions();
            out.xs[static_cast<std::size_t>(v)] = pos[static_cast<std::size_t>(event.rival)] <
                                                          pos[static_cast<std::size_t>(event.target)]
                                                      ? 1
                                                      : -1;
        }
        out.theta = -1;
        return out;
    }
    }
    throw ValidationError("unknown event kind");
}

} // namespace detail

} // namespace winprob
