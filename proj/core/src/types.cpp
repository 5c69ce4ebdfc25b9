#include "winprob/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace winprob {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char ch : name) {
        bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                  (ch >= '0' && ch <= '9') || ch == '_' || ch == '-';
        if (!ok) return false;
    }
    return true;
}

} // namespace

CandidateSet::CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ValidationError("candidate set must not be empty");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names_) {
        if (!valid_name(name))
            throw ValidationError("invalid candidate name '" + name + "' (allowed: [A-Za-z0-9_-]+)");
        if (!seen.insert(name).second)
            throw ValidationError("duplicate candidate name '" + name + "'");
    }
}

std::optional<int> CandidateSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

CandidateSet default_candidate_names(int m) {
    if (m < 1) throw ValidationError("candidate count must be at least 1");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
    return CandidateSet(std::move(names));
}

int Ranking::position_of(int candidate) const {
    for (int pos = 0; pos < size(); ++pos)
        if (order[static_cast<std::size_t>(pos)] == candidate) return pos;
    throw ValidationError("candidate index " + std::to_string(candidate) + " not in ranking");
}

std::vector<int> Ranking::positions() const {
    std::vector<int> inv(order.size(), -1);
    for (int pos = 0; pos < size(); ++pos) {
        int c = order[static_cast<std::size_t>(pos)];
        inv[static_cast<std::size_t>(c)] = pos;
    }
    return inv;
}

namespace {

void check_ranking(const Ranking& ranking, int m, int voter) {
    if (ranking.size() != m)
        throw ValidationError("voter " + std::to_string(voter) + ": ranking has " +
                              std::to_string(ranking.size()) + " entries, expected " +
                              std::to_string(m));
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int c : ranking.order) {
        if (c < 0 || c >= m)
            throw ValidationError("voter " + std::to_string(voter) + ": candidate index " +
                                  std::to_string(c) + " out of range");
        if (seen[static_cast<std::size_t>(c)]++)
            throw ValidationError("voter " + std::to_string(voter) + ": duplicate candidate index " +
                                  std::to_string(c));
    }
}

} // namespace

Profile::Profile(int candidate_count, std::vector<Ranking> rankings)
    : m_(candidate_count), rankings_(std::move(rankings)) {
    if (m_ < 1) throw ValidationError("candidate count must be at least 1");
    for (int v = 0; v < voter_count(); ++v) check_ranking(rankings_[static_cast<std::size_t>(v)], m_, v);
}

ProbabilisticProfile::ProbabilisticProfile(Profile profile, std::vector<double> probs)
    : profile_(std::move(profile)), probs_(std::move(probs)) {
    if (static_cast<int>(probs_.size()) != profile_.voter_count())
        throw ValidationError("probability vector length " + std::to_string(probs_.size()) +
                              " does not match voter count " +
                              std::to_string(profile_.voter_count()));
    for (double p : probs_)
        if (!(p >= 0.0 && p <= 1.0))
            throw ValidationError("attendance probability " + std::to_string(p) +
                                  " outside [0,1]");
}

} // namespace winprob
