#ifndef WINPROB_WINNERS_HPP
#define WINPROB_WINNERS_HPP

#include <vector>

#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob {

// Number of voters that prefer a to b. Requires a != b.
// pairwise_count(a, b) + pairwise_count(b, a) == n on every profile.
int pairwise_count(const Profile& profile, int a, int b);

// Total positional scores for all candidates.
std::vector<Score> total_scores(const Rule& rule, const Profile& profile);

// Full pairwise preference matrix; entry [a*m + b] = N(a, b).
std::vector<int> pairwise_matrix(const Profile& profile);

// Winner set, sorted by candidate index.
//  - positional: argmax of total score (strict argmax under Unique);
//  - Condorcet: the candidate beating all rivals in strict pairwise
//    majority, if one exists (identical under both semantics);
//  - Maximin: argmax of min over rivals of N(c, rival).
// The empty profile is legal; under co-winner semantics every candidate
// wins it for positional and Maximin rules.
std::vector<int> winners(const Rule& rule, const Profile& profile, WinnerSemantics semantics);

} // namespace winprob

#endif
