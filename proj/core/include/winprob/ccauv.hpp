#ifndef WINPROB_CCAUV_HPP
#define WINPROB_CCAUV_HPP

#include <optional>
#include <vector>

#include "winprob/rules.hpp"
#include "winprob/types.hpp"

namespace winprob {

// Control by adding an unlimited number of voters: a registered profile M,
// an unregistered profile Q over the same candidates, and a target
// candidate. The question is whether some sublist Q' ⊆ Q makes the target
// a winner of M ∘ Q'.
struct CcauvInstance {
    CandidateSet candidates;
    Profile registered;   // M
    Profile unregistered; // Q
    int target;

    CcauvInstance(CandidateSet candidates, Profile registered, Profile unregistered, int target);
};

struct CcauvDecision {
    bool controllable = false;
    std::vector<int> witness; // indices into Q; empty when not controllable
};

inline constexpr int kDefaultCcauvLimit = 20;

// Buckets a probabilistic profile by attendance probability: p = 0 voters
// are dropped, p = 1 voters form M, interior voters form Q. Candidate
// names default to c0, c1, ...
CcauvInstance split_ccauv(const ProbabilisticProfile& pp, int target);
CcauvInstance split_ccauv(const ProbabilisticProfile& pp, int target, CandidateSet candidates);

// Inverse direction: M voters attend with probability 1, Q voters with 1/2.
ProbabilisticProfile ccauv_to_probabilistic(const CcauvInstance& instance);

// Polynomial-time CCAUV for binary positional rules (every position score
// in {0,1}): the target wins with some sublist iff it wins with Q* = all
// unregistered voters that score 1 for it. The returned witness is Q*.
CcauvDecision ccauv_binary(const CcauvInstance& instance, const Rule& rule,
                           WinnerSemantics semantics = WinnerSemantics::CoWinner);

// CCAUV by enumerating all sublists Q' ⊆ Q; returns the lexicographically
// least witness. Refuses when |Q| exceeds `limit`.
CcauvDecision ccauv_brute(const CcauvInstance& instance, const Rule& rule,
                          WinnerSemantics semantics = WinnerSemantics::CoWinner,
                          int limit = kDefaultCcauvLimit);

// Number of sublists Q' ⊆ Q (any cardinality) whose addition makes the
// target a winner; the count α in the identity Pr[win] = 2^{-|Q|} α for
// the half-probability instance.
unsigned long long ccauv_count_brute(const CcauvInstance& instance, const Rule& rule,
                                     WinnerSemantics semantics = WinnerSemantics::CoWinner,
                                     int limit = kDefaultCcauvLimit);

// Decides Pr[target wins] > 0. The answer does not depend on the interior
// probability values: binary positional rules go through ccauv_binary,
// everything else falls back to ccauv_brute (refusing when Q is too big).
bool win_positive(const ProbabilisticProfile& pp, const Rule& rule, int target,
                  WinnerSemantics semantics = WinnerSemantics::CoWinner,
                  int limit = kDefaultCcauvLimit);

} // namespace winprob

#endif
