#ifndef WINPROB_RULES_HPP
#define WINPROB_RULES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "winprob/types.hpp"

namespace winprob {

using Score = std::int64_t;

// Non-increasing vector of natural position scores; the first entry must
// strictly exceed the last (so m >= 2 for every positional rule).
class ScoreVector {
public:
    explicit ScoreVector(std::vector<Score> scores);

    int size() const { return static_cast<int>(scores_.size()); }
    Score at(int position) const { return scores_.at(static_cast<std::size_t>(position)); }
    Score max() const { return scores_.front(); }
    const std::vector<Score>& scores() const { return scores_; }
    bool is_binary() const; // every entry in {0, 1}

private:
    std::vector<Score> scores_;
};

enum class PositionalFamily { Plurality, Veto, KApproval, KVeto, Borda, Rfl, Explicit };

// A voting rule: a positional scoring family, Condorcet, or Maximin.
class Rule {
public:
    enum class Kind { Positional, Condorcet, Maximin };

    static Rule plurality();
    static Rule veto();
    static Rule k_approval(int k); // k >= 1; k < m checked at materialization
    static Rule k_veto(int k);
    static Rule borda();
    static Rule rfl(int f, int ell); // f >= 1, ell >= 1; f + ell <= m checked later
    static Rule explicit_vector(ScoreVector v);
    static Rule condorcet();
    static Rule maximin();

    Kind kind() const { return kind_; }
    bool is_positional() const { return kind_ == Kind::Positional; }
    PositionalFamily family() const; // positional rules only

    // Materializes the score vector for m candidates; validates that the
    // family parameters fit m.
    ScoreVector score_vector(int m) const;
    // True iff positional and every position score is 0 or 1.
    bool is_binary(int m) const;

    // Command-line spelling: plurality, veto, approval:K, kveto:K, borda,
    // rfl:F,L, vector:s1,s2,..., condorcet, maximin.
    std::string to_string() const;
    static Rule parse(std::string_view text);

private:
    Rule() = default;

    Kind kind_ = Kind::Positional;
    PositionalFamily family_ = PositionalFamily::Plurality;
    int k_ = 0;
    int f_ = 0;
    int ell_ = 0;
    std::optional<ScoreVector> explicit_;
};

// Score a single ranking contributes to a candidate under a positional rule.
Score position_score(const Rule& rule, const Ranking& ranking, int candidate);

// Sum of position scores over all voters; 0 for the empty profile.
Score total_score(const Rule& rule, const Profile& profile, int candidate);

} // namespace winprob

#endif
