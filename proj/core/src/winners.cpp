#include "winprob/winners.hpp"

#include <algorithm>

#include "subset_eval.hpp"
#include "winprob/errors.hpp"

namespace winprob {

int pairwise_count(const Profile& profile, int a, int b) {
    const int m = profile.candidate_count();
    if (a < 0 || a >= m || b < 0 || b >= m) throw ValidationError("candidate index out of range");
    if (a == b) throw ValidationError("pairwise count requires two distinct candidates");
    int count = 0;
    for (const Ranking& ranking : profile.rankings()) {
        auto pos = ranking.positions();
        if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]) ++count;
    }
    return count;
}

std::vector<Score> total_scores(const Rule& rule, const Profile& profile) {
    const int m = profile.candidate_count();
    ScoreVector sv = rule.score_vector(m);
    std::vector<Score> scores(static_cast<std::size_t>(m), 0);
    for (const Ranking& ranking : profile.rankings())
        for (int pos = 0; pos < m; ++pos)
            scores[static_cast<std::size_t>(ranking.at_position(pos))] += sv.at(pos);
    return scores;
}

std::vector<int> pairwise_matrix(const Profile& profile) {
    const int m = profile.candidate_count();
    std::vector<int> n(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (const Ranking& ranking : profile.rankings()) {
        // every later-ranked candidate loses to every earlier-ranked one
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                ++n[static_cast<std::size_t>(ranking.at_position(i)) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(ranking.at_position(j))];
    }
    return n;
}

namespace detail {

std::vector<int> winners_positional(const std::vector<Score>& scores, WinnerSemantics semantics) {
    const int m = static_cast<int>(scores.size());
    Score best = *std::max_element(scores.begin(), scores.end());
    std::vector<int> result;
    for (int c = 0; c < m; ++c)
        if (scores[static_cast<std::size_t>(c)] == best) result.push_back(c);
    if (semantics == WinnerSemantics::Unique && result.size() != 1) result.clear();
    return result;
}

std::vector<int> winners_condorcet(const std::vector<int>& pairwise, int m) {
    for (int c = 0; c < m; ++c) {
        bool beats_all = true;
        for (int d = 0; d < m && beats_all; ++d) {
            if (d == c) continue;
            if (pairwise[static_cast<std::size_t>(c) * static_cast<std::size_t>(m) +
                         static_cast<std::size_t>(d)] <=
                pairwise[static_cast<std::size_t>(d) * static_cast<std::size_t>(m) +
                         static_cast<std::size_t>(c)])
                beats_all = false;
        }
        if (beats_all) return {c}; // at most one candidate can beat all rivals
    }
    return {};
}

namespace {

long long maximin_score(const std::vector<int>& pairwise, int m, int c) {
    if (m == 1) return 0;
    long long best = -1;
    for (int d = 0; d < m; ++d) {
        if (d == c) continue;
        long long n = pairwise[static_cast<std::size_t>(c) * static_cast<std::size_t>(m) +
                               static_cast<std::size_t>(d)];
        if (best < 0 || n < best) best = n;
    }
    return best;
}

} // namespace

std::vector<int> winners_maximin(const std::vector<int>& pairwise, int m,
                                 WinnerSemantics semantics) {
    std::vector<long long> scores(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) scores[static_cast<std::size_t>(c)] = maximin_score(pairwise, m, c);
    long long best = *std::max_element(scores.begin(), scores.end());
    std::vector<int> result;
    for (int c = 0; c < m; ++c)
        if (scores[static_cast<std::size_t>(c)] == best) result.push_back(c);
    if (semantics == WinnerSemantics::Unique && result.size() != 1) result.clear();
    return result;
}

bool is_winner_positional(const std::vector<Score>& scores, int candidate,
                          WinnerSemantics semantics) {
    const Score own = scores[static_cast<std::size_t>(candidate)];
    for (int c = 0; c < static_cast<int>(scores.size()); ++c) {
        if (c == candidate) continue;
        const Score other = scores[static_cast<std::size_t>(c)];
        if (semantics == WinnerSemantics::CoWinner ? other > own : other >= own) return false;
    }
    return true;
}

bool is_winner_condorcet(const std::vector<int>& pairwise, int m, int candidate) {
    for (int d = 0; d < m; ++d) {
        if (d == candidate) continue;
        if (pairwise[static_cast<std::size_t>(candidate) * static_cast<std::size_t>(m) +
                     static_cast<std::size_t>(d)] <=
            pairwise[static_cast<std::size_t>(d) * static_cast<std::size_t>(m) +
                     static_cast<std::size_t>(candidate)])
            return false;
    }
    return true;
}

bool is_winner_maximin(const std::vector<int>& pairwise, int m, int candidate,
                       WinnerSemantics semantics) {
    const long long own = maximin_score(pairwise, m, candidate);
    for (int c = 0; c < m; ++c) {
        if (c == candidate) continue;
        const long long other = maximin_score(pairwise, m, c);
        if (semantics == WinnerSemantics::CoWinner ? other > own : other >= own) return false;
    }
    return true;
}

SubsetWinnerEval::SubsetWinnerEval(const Rule& rule, const Profile& base, const Profile& pool)
    : kind_(rule.kind()), m_(base.candidate_count()),
      included_(static_cast<std::size_t>(pool.voter_count()), 0) {
    if (pool.candidate_count() != m_) throw ValidationError("base and pool candidate counts differ");
    const std::size_t mm = static_cast<std::size_t>(m_);
    if (kind_ == Rule::Kind::Positional) {
        scores_ = total_scores(rule, base);
        ScoreVector sv = rule.score_vector(m_);
        pool_rows_.reserve(static_cast<std::size_t>(pool.voter_count()));
        for (const Ranking& ranking : pool.rankings()) {
            std::vector<Score> row(mm, 0);
            for (int pos = 0; pos < m_; ++pos)
                row[static_cast<std::size_t>(ranking.at_position(pos))] = sv.at(pos);
            pool_rows_.push_back(std::move(row));
        }
    } else {
        pairwise_ = pairwise_matrix(base);
        pool_above_.reserve(static_cast<std::size_t>(pool.voter_count()));
        for (const Ranking& ranking : pool.rankings()) {
            std::vector<char> above(mm * mm, 0);
            for (int i = 0; i < m_; ++i)
                for (int j = i + 1; j < m_; ++j)
                    above[static_cast<std::size_t>(ranking.at_position(i)) * mm +
                          static_cast<std::size_t>(ranking.at_position(j))] = 1;
            pool_above_.push_back(std::move(above));
        }
    }
}

void SubsetWinnerEval::toggle(int pool_voter) {
    const std::size_t v = static_cast<std::size_t>(pool_voter);
    const int sign = included_[v] ? -1 : 1;
    included_[v] = !included_[v];
    if (kind_ == Rule::Kind::Positional) {
        const auto& row = pool_rows_[v];
        for (int c = 0; c < m_; ++c) scores_[static_cast<std::size_t>(c)] += sign * row[static_cast<std::size_t>(c)];
    } else {
        const auto& above = pool_above_[v];
        for (std::size_t i = 0; i < above.size(); ++i) pairwise_[i] += sign * above[i];
    }
}

bool SubsetWinnerEval::is_winner(int candidate, WinnerSemantics semantics) const {
    switch (kind_) {
    case Rule::Kind::Positional: return is_winner_positional(scores_, candidate, semantics);
    case Rule::Kind::Condorcet: return is_winner_condorcet(pairwise_, m_, candidate);
    case Rule::Kind::Maximin: return is_winner_maximin(pairwise_, m_, candidate, semantics);
    }
    return false;
}

} // namespace detail

std::vector<int> winners(const Rule& rule, const Profile& profile, WinnerSemantics semantics) {
    const int m = profile.candidate_count();
    switch (rule.kind()) {
    case Rule::Kind::Positional:
        return detail::winners_positional(total_scores(rule, profile), semantics);
    case Rule::Kind::Condorcet:
        if (m == 1) return {0}; // vacuously beats all rivals
        return detail::winners_condorcet(pairwise_matrix(profile), m);
    case Rule::Kind::Maximin:
        return detail::winners_maximin(pairwise_matrix(profile), m, semantics);
    }
    return {};
}

} // namespace winprob
