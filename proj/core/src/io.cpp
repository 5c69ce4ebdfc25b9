#include "winprob/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "winprob/errors.hpp"

namespace winprob {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

bool is_content_line(const std::vector<std::string>& tokens) {
    return !tokens.empty() && tokens[0][0] != '#';
}

double parse_probability(const std::string& token, int line_no) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid probability '" + token + "'");
    }
    if (used != token.size())
        throw ParseError("line " + std::to_string(line_no) + ": invalid probability '" + token + "'");
    if (!(value >= 0.0 && value <= 1.0))
        throw ParseError("line " + std::to_string(line_no) + ": probability '" + token +
                         "' outside [0,1]");
    return value;
}

int parse_index(const std::string& token, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size() || value < 0) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid " + what + " '" + token +
                         "'");
    }
}

} // namespace

ParsedProfile parse_profile_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<CandidateSet> candidates;
    std::vector<Ranking> rankings;
    std::vector<double> probs;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (!is_content_line(tokens)) continue;
        if (!candidates) {
            if (tokens[0] != "candidates" || tokens.size() < 2)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'candidates <name>+'");
            try {
                candidates.emplace(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
            } catch (const ValidationError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            continue;
        }
        if (tokens[0] != "voter")
            throw ParseError("line " + std::to_string(line_no) + ": expected 'voter <prob> <name>+'");
        if (static_cast<int>(tokens.size()) != 2 + candidates->size())
            throw ParseError("line " + std::to_string(line_no) + ": voter line must list all " +
                             std::to_string(candidates->size()) + " candidates");
        probs.push_back(parse_probability(tokens[1], line_no));
        Ranking ranking;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            auto index = candidates->index_of(tokens[i]);
            if (!index)
                throw ParseError("line " + std::to_string(line_no) + ": unknown candidate '" +
                                 tokens[i] + "'");
            ranking.order.push_back(*index);
        }
        std::vector<char> seen(static_cast<std::size_t>(candidates->size()), 0);
        for (int c : ranking.order)
            if (seen[static_cast<std::size_t>(c)]++)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": voter ranking is not a permutation");
        rankings.push_back(std::move(ranking));
    }
    if (!candidates) throw ParseError("missing 'candidates' line");
    ProbabilisticProfile profile(Profile(candidates->size(), std::move(rankings)), std::move(probs));
    return {std::move(*candidates), std::move(profile)};
}

ParsedProfile parse_profile_text(const std::string& text) {
    std::istringstream in(text);
    return parse_profile_file(in);
}

void write_profile_file(std::ostream& out, const CandidateSet& candidates,
                        const ProbabilisticProfile& profile,
                        const std::vector<std::string>& comments) {
    for (const auto& comment : comments) out << "# " << comment << '\n';
    out << "candidates";
    for (const auto& name : candidates.names()) out << ' ' << name;
    out << '\n';
    for (int v = 0; v < profile.voter_count(); ++v) {
        out << "voter " << format_probability(profile.prob(v));
        const Ranking& ranking = profile.profile().ranking(v);
        for (int pos = 0; pos < ranking.size(); ++pos)
            out << ' ' << candidates.name(ranking.at_position(pos));
        out << '\n';
    }
}

Graph parse_graph_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    int vertex_count = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (!is_content_line(tokens)) continue;
        if (vertex_count < 0) {
            if (tokens[0] != "graph" || tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'graph <n>'");
            vertex_count = parse_index(tokens[1], line_no, "vertex count");
            continue;
        }
        if (tokens[0] != "edge" || tokens.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'edge <u> <v>'");
        edges.emplace_back(parse_index(tokens[1], line_no, "vertex"),
                           parse_index(tokens[2], line_no, "vertex"));
    }
    if (vertex_count < 0) throw ParseError("missing 'graph' line");
    try {
        return Graph(vertex_count, std::move(edges));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

SetSystem parse_set_system_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    int universe = -1;
    std::vector<std::array<int, 3>> sets;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (!is_content_line(tokens)) continue;
        if (universe < 0) {
            if (tokens[0] != "x3c" || tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'x3c <3q>'");
            universe = parse_index(tokens[1], line_no, "universe size");
            continue;
        }
        if (tokens[0] != "set" || tokens.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'set <a> <b> <c>'");
        sets.push_back({parse_index(tokens[1], line_no, "element"),
                        parse_index(tokens[2], line_no, "element"),
                        parse_index(tokens[3], line_no, "element")});
    }
    if (universe < 0) throw ParseError("missing 'x3c' line");
    try {
        return SetSystem(universe, std::move(sets));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

std::string format_probability(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

ResultRecord& ResultRecord::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
}

ResultRecord& ResultRecord::add(const std::string& key, long long value) {
    return add(key, std::to_string(value));
}

ResultRecord& ResultRecord::add(const std::string& key, unsigned long long value) {
    return add(key, std::to_string(value));
}

ResultRecord& ResultRecord::add_probability(const std::string& key, double value) {
    return add(key, format_probability(value));
}

ResultRecord& ResultRecord::add_list(const std::string& key, const std::vector<std::string>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) joined += ',';
        joined += values[i];
    }
    return add(key, joined);
}

ResultRecord& ResultRecord::add_indices(const std::string& key, const std::vector<int>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) joined += ',';
        joined += std::to_string(values[i]);
    }
    return add(key, joined);
}

std::string ResultRecord::line() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ' ';
        out += fields_[i].first;
        out += '=';
        out += fields_[i].second;
    }
    return out;
}

} // namespace winprob
