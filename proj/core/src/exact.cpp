#include "winprob/exact.hpp"

#include <algorithm>
#include <bit>

#include "subset_eval.hpp"
#include "winprob/errors.hpp"

namespace winprob {

double CountDistribution::pr_eq(int y) const {
    if (y < 0 || y >= static_cast<int>(probs.size())) return 0.0;
    return probs[static_cast<std::size_t>(y)];
}

double CountDistribution::pr_le(int y) const {
    if (y < 0) return 0.0;
    double sum = 0.0;
    const int top = std::min(y, static_cast<int>(probs.size()) - 1);
    for (int i = 0; i <= top; ++i) sum += probs[static_cast<std::size_t>(i)];
    return sum;
}

double CountDistribution::pr_ge(int y) const {
    double sum = 0.0;
    for (int i = std::max(y, 0); i < static_cast<int>(probs.size()); ++i)
        sum += probs[static_cast<std::size_t>(i)];
    return sum;
}

namespace {

void check_voter_set(const std::vector<int>& voters, int n, const char* what) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : voters) {
        if (v < 0 || v >= n)
            throw ValidationError(std::string(what) + ": voter index " + std::to_string(v) +
                                  " out of range");
        if (seen[static_cast<std::size_t>(v)]++)
            throw ValidationError(std::string(what) + ": duplicate voter index " +
                                  std::to_string(v));
    }
}

} // namespace

double subset_probability(const ProbabilisticProfile& pp, const std::vector<int>& subset) {
    const int n = pp.voter_count();
    check_voter_set(subset, n, "subset_probability");
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : subset) in[static_cast<std::size_t>(v)] = 1;
    double prob = 1.0;
    for (int i = 0; i < n; ++i) prob *= in[static_cast<std::size_t>(i)] ? pp.prob(i) : 1.0 - pp.prob(i);
    return prob;
}

CountDistribution marginal_count_dist(const ProbabilisticProfile& pp, const std::vector<int>& marked) {
    const int n = pp.voter_count();
    check_voter_set(marked, n, "marginal_count_dist");
    CountDistribution dist;
    dist.probs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    dist.probs[0] = 1.0;
    int t = 0;
    for (int v : marked) {
        const double p = pp.prob(v);
        for (int y = t + 1; y >= 1; --y)
            dist.probs[static_cast<std::size_t>(y)] =
                p * dist.probs[static_cast<std::size_t>(y) - 1] +
                (1.0 - p) * dist.probs[static_cast<std::size_t>(y)];
        dist.probs[0] *= 1.0 - p;
        ++t;
    }
    return dist;
}

namespace {

// Shared combination step for the plurality/veto formulas: per-candidate
// marked-count distributions are independent because every voter marks
// exactly one candidate.
double combine_independent(const std::vector<CountDistribution>& dists, int candidate, int n,
                           WinnerSemantics semantics, bool veto) {
    const int m = static_cast<int>(dists.size());
    double total = 0.0;
    for (int s = 0; s <= n; ++s) {
        const double own = dists[static_cast<std::size_t>(candidate)].pr_eq(s);
        if (own == 0.0) continue;
        double factor = 1.0;
        for (int c = 0; c < m && factor > 0.0; ++c) {
            if (c == candidate) continue;
            const auto& d = dists[static_cast<std::size_t>(c)];
            if (!veto)
                factor *= semantics == WinnerSemantics::CoWinner ? d.pr_le(s) : d.pr_le(s - 1);
            else
                factor *= semantics == WinnerSemantics::CoWinner ? d.pr_ge(s) : d.pr_ge(s + 1);
        }
        total += own * factor;
    }
    return std::clamp(total, 0.0, 1.0);
}

} // namespace

double win_prob_plurality(const ProbabilisticProfile& pp, int candidate, WinnerSemantics semantics) {
    const int m = pp.candidate_count();
    const int n = pp.voter_count();
    if (candidate < 0 || candidate >= m) throw ValidationError("candidate index out of range");
    Rule::plurality().score_vector(m); // validates m >= 2
    std::vector<CountDistribution> dists;
    dists.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        std::vector<int> marked;
        for (int v = 0; v < n; ++v)
            if (pp.profile().ranking(v).at_position(0) == c) marked.push_back(v);
        dists.push_back(marginal_count_dist(pp, marked));
    }
    return combine_independent(dists, candidate, n, semantics, /*veto=*/false);
}

double win_prob_veto(const ProbabilisticProfile& pp, int candidate, WinnerSemantics semantics) {
    const int m = pp.candidate_count();
    const int n = pp.voter_count();
    if (candidate < 0 || candidate >= m) throw ValidationError("candidate index out of range");
    Rule::veto().score_vector(m);
    std::vector<CountDistribution> dists;
    dists.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        std::vector<int> marked;
        for (int v = 0; v < n; ++v)
            if (pp.profile().ranking(v).at_position(m - 1) == c) marked.push_back(v);
        dists.push_back(marginal_count_dist(pp, marked));
    }
    return combine_independent(dists, candidate, n, semantics, /*veto=*/true);
}

double brute_force_win_prob(const ProbabilisticProfile& pp, const Rule& rule, int candidate,
                            WinnerSemantics semantics, int limit) {
    const int n = pp.voter_count();
    const int m = pp.candidate_count();
    if (candidate < 0 || candidate >= m) throw ValidationError("candidate index out of range");
    if (n > limit)
        throw RefusalError("brute force refused: " + std::to_string(n) + " voters exceeds limit " +
                           std::to_string(limit));
    if (rule.is_positional()) rule.score_vector(m); // fail fast on bad parameters

    detail::SubsetWinnerEval eval(rule, Profile(m, {}), pp.profile());
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    double total = 0.0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t i = 0;; ++i) {
        double prob = 1.0;
        for (int v = 0; v < n && prob != 0.0; ++v)
            prob *= present[static_cast<std::size_t>(v)] ? pp.prob(v) : 1.0 - pp.prob(v);
        if (prob != 0.0 && eval.is_winner(candidate, semantics)) total += prob;
        if (i + 1 == count) break;
        const int bit = std::countr_zero(i + 1); // Gray-code step
        eval.toggle(bit);
        present[static_cast<std::size_t>(bit)] = !present[static_cast<std::size_t>(bit)];
    }
    return std::clamp(total, 0.0, 1.0);
}

double brute_force_lose_prob(const ProbabilisticProfile& pp, const Rule& rule, int candidate,
                             WinnerSemantics semantics, int limit) {
    return 1.0 - brute_force_win_prob(pp, rule, candidate, semantics, limit);
}

} // namespace winprob
