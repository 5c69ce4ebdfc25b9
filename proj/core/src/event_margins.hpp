#ifndef WINPROB_EVENT_MARGINS_HPP
#define WINPROB_EVENT_MARGINS_HPP

// Internal bridge between the conditional DPs and the samplers: every lose
// event is of the form sum_{i in I} x_i > theta for per-voter integer
// margins x_i (rival-minus-target scores for positional rules, +/-1
// pairwise preferences for Condorcet; theta = 0 strict, -1 weak).

#include <vector>

#include "winprob/conditional.hpp"
#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob::detail {

struct EventMargins {
    std::vector<Score> xs;
    Score theta = 0;
};

// Validates event/rule consistency.
EventMargins event_margins(const ProbabilisticProfile& pp, const Rule& rule,
                           const LoseEvent& event);

double exceed_tail_probability(const std::vector<Score>& xs, const std::vector<double>& ps,
                               Score threshold);

} // namespace winprob::detail

#endif
