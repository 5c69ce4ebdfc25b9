#ifndef WINPROB_SUBSET_EVAL_HPP
#define WINPROB_SUBSET_EVAL_HPP

// Internal helpers shared by winner determination and the brute-force
// enumerations: winner tests on score / pairwise state, and incremental
// state updates when voters are toggled in and out of a sub-profile.

#include <vector>

#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob::detail {

std::vector<int> winners_positional(const std::vector<Score>& scores, WinnerSemantics semantics);

// pairwise is an m*m row-major matrix of N(a, b) counts.
std::vector<int> winners_condorcet(const std::vector<int>& pairwise, int m);
std::vector<int> winners_maximin(const std::vector<int>& pairwise, int m, WinnerSemantics semantics);

bool is_winner_positional(const std::vector<Score>& scores, int candidate,
                          WinnerSemantics semantics);
bool is_winner_condorcet(const std::vector<int>& pairwise, int m, int candidate);
bool is_winner_maximin(const std::vector<int>& pairwise, int m, int candidate,
                       WinnerSemantics semantics);

// Winner evaluation over sub-profiles of a voter pool stacked on top of a
// fixed base profile. State updates are O(m) per toggle for positional
// rules and O(m^2) for pairwise rules, so Gray-code enumeration of all
// sub-profiles costs O(2^n * m^2) overall.
class SubsetWinnerEval {
public:
    SubsetWinnerEval(const Rule& rule, const Profile& base, const Profile& pool);

    void toggle(int pool_voter); // include if absent, exclude if present
    bool is_winner(int candidate, WinnerSemantics semantics) const;

private:
    Rule::Kind kind_;
    int m_ = 0;
    std::vector<char> included_;
    // positional state
    std::vector<Score> scores_;
    std::vector<std::vector<Score>> pool_rows_;
    // pairwise state
    std::vector<int> pairwise_;
    std::vector<std::vector<char>> pool_above_; // [voter][a*m+b] = 1 iff a above b
};

} // namespace winprob::detail

#endif
