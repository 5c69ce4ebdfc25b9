#include "winprob/ccauv.hpp"

#include <algorithm>
#include <bit>

#include "subset_eval.hpp"
#include "winprob/errors.hpp"
#include "winprob/winners.hpp"

namespace winprob {

CcauvInstance::CcauvInstance(CandidateSet candidates_in, Profile registered_in,
                             Profile unregistered_in, int target_in)
    : candidates(std::move(candidates_in)), registered(std::move(registered_in)),
      unregistered(std::move(unregistered_in)), target(target_in) {
    if (registered.candidate_count() != candidates.size() ||
        unregistered.candidate_count() != candidates.size())
        throw ValidationError("registered and unregistered profiles must share the candidate set");
    if (target < 0 || target >= candidates.size())
        throw ValidationError("target candidate index out of range");
}

CcauvInstance split_ccauv(const ProbabilisticProfile& pp, int target) {
    return split_ccauv(pp, target, default_candidate_names(pp.candidate_count()));
}

CcauvInstance split_ccauv(const ProbabilisticProfile& pp, int target, CandidateSet candidates) {
    if (candidates.size() != pp.candidate_count())
        throw ValidationError("candidate set size does not match the profile");
    std::vector<Ranking> registered, unregistered;
    for (int v = 0; v < pp.voter_count(); ++v) {
        const double p = pp.prob(v);
        if (p == 0.0) continue; // never attends
        if (p == 1.0)
            registered.push_back(pp.profile().ranking(v));
        else
            unregistered.push_back(pp.profile().ranking(v));
    }
    const int m = pp.candidate_count();
    return CcauvInstance(std::move(candidates), Profile(m, std::move(registered)),
                         Profile(m, std::move(unregistered)), target);
}

ProbabilisticProfile ccauv_to_probabilistic(const CcauvInstance& instance) {
    std::vector<Ranking> rankings = instance.registered.rankings();
    rankings.insert(rankings.end(), instance.unregistered.rankings().begin(),
                    instance.unregistered.rankings().end());
    std::vector<double> probs(static_cast<std::size_t>(instance.registered.voter_count()), 1.0);
    probs.resize(rankings.size(), 0.5);
    return ProbabilisticProfile(Profile(instance.candidates.size(), std::move(rankings)),
                                std::move(probs));
}

CcauvDecision ccauv_binary(const CcauvInstance& instance, const Rule& rule,
                           WinnerSemantics semantics) {
    const int m = instance.candidates.size();
    if (!rule.is_binary(m))
        throw UnsupportedRuleError("ccauv_binary requires a binary positional rule, got " +
                                   rule.to_string());
    ScoreVector sv = rule.score_vector(m);
    // Q* = every unregistered voter that scores 1 for the target; adding
    // them never hurts the target and removing the rest never helps a rival.
    std::vector<int> q_star;
    std::vector<Ranking> rankings = instance.registered.rankings();
    for (int v = 0; v < instance.unregistered.voter_count(); ++v) {
        const Ranking& ranking = instance.unregistered.ranking(v);
        if (sv.at(ranking.position_of(instance.target)) == 1) {
            q_star.push_back(v);
            rankings.push_back(ranking);
        }
    }
    Profile combined(m, std::move(rankings));
    auto winner_set = winners(rule, combined, semantics);
    if (std::find(winner_set.begin(), winner_set.end(), instance.target) != winner_set.end())
        return {true, std::move(q_star)};
    return {false, {}};
}

namespace {

void check_q_limit(const CcauvInstance& instance, int limit, const char* what) {
    const int k = instance.unregistered.voter_count();
    if (k > limit)
        throw RefusalError(std::string(what) + " refused: " + std::to_string(k) +
                           " unregistered voters exceeds limit " + std::to_string(limit));
}

} // namespace

CcauvDecision ccauv_brute(const CcauvInstance& instance, const Rule& rule,
                          WinnerSemantics semantics, int limit) {
    check_q_limit(instance, limit, "ccauv_brute");
    const int k = instance.unregistered.voter_count();
    detail::SubsetWinnerEval eval(rule, instance.registered, instance.unregistered);

    // Depth-first over sublists in lexicographic order of their sorted
    // index sequences, so the first hit is the lexicographically least
    // witness (the empty sublist comes first).
    std::vector<int> current;
    auto search = [&](auto&& self, int next) -> bool {
        if (eval.is_winner(instance.target, semantics)) return true;
        for (int v = next; v < k; ++v) {
            eval.toggle(v);
            current.push_back(v);
            if (self(self, v + 1)) return true;
            current.pop_back();
            eval.toggle(v);
        }
        return false;
    };
    if (search(search, 0)) return {true, std::move(current)};
    return {false, {}};
}

unsigned long long ccauv_count_brute(const CcauvInstance& instance, const Rule& rule,
                                     WinnerSemantics semantics, int limit) {
    check_q_limit(instance, limit, "ccauv_count_brute");
    const int k = instance.unregistered.voter_count();
    detail::SubsetWinnerEval eval(rule, instance.registered, instance.unregistered);
    unsigned long long count = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 0;; ++i) {
        if (eval.is_winner(instance.target, semantics)) ++count;
        if (i + 1 == total) break;
        eval.toggle(std::countr_zero(i + 1)); // Gray-code step
    }
    return count;
}

bool win_positive(const ProbabilisticProfile& pp, const Rule& rule, int target,
                  WinnerSemantics semantics, int limit) {
    const int m = pp.candidate_count();
    if (target < 0 || target >= m) throw ValidationError("candidate index out of range");
    CcauvInstance instance = split_ccauv(pp, target);
    if (rule.is_positional() && rule.is_binary(m))
        return ccauv_binary(instance, rule, semantics).controllable;
    return ccauv_brute(instance, rule, semantics, limit).controllable;
}

} // namespace winprob
