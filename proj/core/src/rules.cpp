#include "winprob/rules.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "winprob/errors.hpp"

namespace winprob {

ScoreVector::ScoreVector(std::vector<Score> scores) : scores_(std::move(scores)) {
    if (scores_.size() < 2) throw ValidationError("score vector needs at least 2 entries");
    for (std::size_t i = 0; i < scores_.size(); ++i) {
        if (scores_[i] < 0) throw ValidationError("score vector entries must be natural numbers");
        if (i > 0 && scores_[i] > scores_[i - 1])
            throw ValidationError("score vector must be non-increasing");
    }
    if (scores_.front() == scores_.back())
        throw ValidationError("score vector must satisfy s(1) > s(m)");
}

bool ScoreVector::is_binary() const {
    return scores_.front() == 1 && scores_.back() == 0;
}

Rule Rule::plurality() {
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::Plurality;
    return r;
}

Rule Rule::veto() {
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::Veto;
    return r;
}

Rule Rule::k_approval(int k) {
    if (k < 1) throw ValidationError("k-approval requires k >= 1");
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::KApproval;
    r.k_ = k;
    return r;
}

Rule Rule::k_veto(int k) {
    if (k < 1) throw ValidationError("k-veto requires k >= 1");
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::KVeto;
    r.k_ = k;
    return r;
}

Rule Rule::borda() {
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::Borda;
    return r;
}

Rule Rule::rfl(int f, int ell) {
    if (f < 1 || ell < 1) throw ValidationError("R(f,l) requires f >= 1 and l >= 1");
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::Rfl;
    r.f_ = f;
    r.ell_ = ell;
    return r;
}

Rule Rule::explicit_vector(ScoreVector v) {
    Rule r;
    r.kind_ = Kind::Positional;
    r.family_ = PositionalFamily::Explicit;
    r.explicit_ = std::move(v);
    return r;
}

Rule Rule::condorcet() {
    Rule r;
    r.kind_ = Kind::Condorcet;
    return r;
}

Rule Rule::maximin() {
    Rule r;
    r.kind_ = Kind::Maximin;
    return r;
}

PositionalFamily Rule::family() const {
    if (kind_ != Kind::Positional) throw ValidationError("rule is not positional");
    return family_;
}

ScoreVector Rule::score_vector(int m) const {
    if (kind_ != Kind::Positional) throw ValidationError("rule is not positional");
    if (m < 2) throw ValidationError("positional rules require at least 2 candidates");
    const std::size_t mm = static_cast<std::size_t>(m);
    switch (family_) {
    case PositionalFamily::Plurality: {
        std::vector<Score> s(mm, 0);
        s[0] = 1;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::Veto: {
        std::vector<Score> s(mm, 1);
        s[mm - 1] = 0;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::KApproval: {
        if (k_ >= m)
            throw ValidationError("k-approval requires k < m (k=" + std::to_string(k_) +
                                  ", m=" + std::to_string(m) + ")");
        std::vector<Score> s(mm, 0);
        for (int j = 0; j < k_; ++j) s[static_cast<std::size_t>(j)] = 1;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::KVeto: {
        if (k_ >= m)
            throw ValidationError("k-veto requires k < m (k=" + std::to_string(k_) +
                                  ", m=" + std::to_string(m) + ")");
        std::vector<Score> s(mm, 1);
        for (int j = 0; j < k_; ++j) s[mm - 1 - static_cast<std::size_t>(j)] = 0;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::Borda: {
        std::vector<Score> s(mm);
        for (int j = 0; j < m; ++j) s[static_cast<std::size_t>(j)] = m - 1 - j;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::Rfl: {
        if (f_ + ell_ > m)
            throw ValidationError("R(f,l) requires f + l <= m (f=" + std::to_string(f_) +
                                  ", l=" + std::to_string(ell_) + ", m=" + std::to_string(m) + ")");
        std::vector<Score> s(mm, 1);
        for (int j = 0; j < f_; ++j) s[static_cast<std::size_t>(j)] = 2;
        for (int j = 0; j < ell_; ++j) s[mm - 1 - static_cast<std::size_t>(j)] = 0;
        return ScoreVector(std::move(s));
    }
    case PositionalFamily::Explicit: {
        if (explicit_->size() != m)
            throw ValidationError("explicit score vector has " + std::to_string(explicit_->size()) +
                                  " entries, expected " + std::to_string(m));
        return *explicit_;
    }
    }
    throw ValidationError("unknown positional family");
}

bool Rule::is_binary(int m) const {
    if (kind_ != Kind::Positional) return false;
    return score_vector(m).is_binary();
}

std::string Rule::to_string() const {
    switch (kind_) {
    case Kind::Condorcet: return "condorcet";
    case Kind::Maximin: return "maximin";
    case Kind::Positional: break;
    }
    switch (family_) {
    case PositionalFamily::Plurality: return "plurality";
    case PositionalFamily::Veto: return "veto";
    case PositionalFamily::KApproval: return "approval:" + std::to_string(k_);
    case PositionalFamily::KVeto: return "kveto:" + std::to_string(k_);
    case PositionalFamily::Borda: return "borda";
    case PositionalFamily::Rfl: return "rfl:" + std::to_string(f_) + "," + std::to_string(ell_);
    case PositionalFamily::Explicit: {
        std::ostringstream out;
        out << "vector:";
        const auto& s = explicit_->scores();
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ',';
            out << s[i];
        }
        return out.str();
    }
    }
    return "?";
}

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ValidationError(std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Rule Rule::parse(std::string_view text) {
    if (text == "plurality") return plurality();
    if (text == "veto") return veto();
    if (text == "borda") return borda();
    if (text == "condorcet") return condorcet();
    if (text == "maximin") return maximin();
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        std::string_view head = text.substr(0, colon);
        std::string_view tail = text.substr(colon + 1);
        if (head == "approval") return k_approval(parse_int(tail, "approval parameter"));
        if (head == "kveto") return k_veto(parse_int(tail, "kveto parameter"));
        if (head == "rfl") {
            auto parts = split(tail, ',');
            if (parts.size() != 2) throw ValidationError("rfl expects rfl:F,L");
            return rfl(parse_int(parts[0], "rfl parameter"), parse_int(parts[1], "rfl parameter"));
        }
        if (head == "vector") {
            auto parts = split(tail, ',');
            std::vector<Score> scores;
            scores.reserve(parts.size());
            for (auto part : parts) scores.push_back(parse_int(part, "score entry"));
            return explicit_vector(ScoreVector(std::move(scores)));
        }
    }
    throw ValidationError("unknown rule '" + std::string(text) + "'");
}

Score position_score(const Rule& rule, const Ranking& ranking, int candidate) {
    ScoreVector sv = rule.score_vector(ranking.size());
    return sv.at(ranking.position_of(candidate));
}

Score total_score(const Rule& rule, const Profile& profile, int candidate) {
    if (candidate < 0 || candidate >= profile.candidate_count())
        throw ValidationError("candidate index out of range");
    ScoreVector sv = rule.score_vector(profile.candidate_count());
    Score sum = 0;
    for (const Ranking& ranking : profile.rankings()) sum += sv.at(ranking.position_of(candidate));
    return sum;
}

} // namespace winprob
