#ifndef WINPROB_TYPES_HPP
#define WINPROB_TYPES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "winprob/errors.hpp"

namespace winprob {

// Co-winner: no candidate strictly exceeds the winner's score.
// Unique: the winner strictly exceeds every rival's score.
enum class WinnerSemantics { CoWinner, Unique };

// Ordered list of distinct candidate names. A candidate's index in this
// list is its identity everywhere else in the library, and index order is
// the global tie-break order. Names must match [A-Za-z0-9_-]+.
class CandidateSet {
public:
    explicit CandidateSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

// Generic names c0, c1, ... for instances built without an I/O boundary.
CandidateSet default_candidate_names(int m);

// One voter's ranking; order[0] is the most preferred candidate index.
struct Ranking {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int at_position(int pos) const { return order.at(static_cast<std::size_t>(pos)); }
    int position_of(int candidate) const;
    // Inverse permutation: positions()[c] = position of candidate c.
    std::vector<int> positions() const;
};

// Immutable list of rankings over a fixed candidate count. n = 0 is legal.
class Profile {
public:
    Profile(int candidate_count, std::vector<Ranking> rankings);

    int candidate_count() const { return m_; }
    int voter_count() const { return static_cast<int>(rankings_.size()); }
    const Ranking& ranking(int voter) const { return rankings_.at(static_cast<std::size_t>(voter)); }
    const std::vector<Ranking>& rankings() const { return rankings_; }

private:
    int m_;
    std::vector<Ranking> rankings_;
};

// A profile where voter i attends the election independently with
// probability probs[i].
class ProbabilisticProfile {
public:
    ProbabilisticProfile(Profile profile, std::vector<double> probs);

    const Profile& profile() const { return profile_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(int voter) const { return probs_.at(static_cast<std::size_t>(voter)); }
    int candidate_count() const { return profile_.candidate_count(); }
    int voter_count() const { return profile_.voter_count(); }

private:
    Profile profile_;
    std::vector<double> probs_;
};

} // namespace winprob

#endif
