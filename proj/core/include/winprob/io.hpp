#ifndef WINPROB_IO_HPP
#define WINPROB_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "winprob/generators.hpp"
#include "winprob/types.hpp"

namespace winprob {

// Profile file grammar (UTF-8 text, `#` starts a comment line):
//   candidates <name>+
//   voter <prob> <name>+        one line per voter; names are a permutation
struct ParsedProfile {
    CandidateSet candidates;
    ProbabilisticProfile profile;
};

ParsedProfile parse_profile_file(std::istream& in);
ParsedProfile parse_profile_text(const std::string& text);

void write_profile_file(std::ostream& out, const CandidateSet& candidates,
                        const ProbabilisticProfile& profile,
                        const std::vector<std::string>& comments = {});

// Graph file grammar:   graph <n>   then   edge <u> <v>   (0-based)
Graph parse_graph_file(std::istream& in);

// Set-system file grammar:   x3c <3q>   then   set <a> <b> <c>   (0-based)
SetSystem parse_set_system_file(std::istream& in);

// Probability rendering with 17 significant digits (lossless for doubles).
std::string format_probability(double value);

// Single-line machine-readable output record: space-separated key=value
// pairs in insertion order.
class ResultRecord {
public:
    ResultRecord& add(const std::string& key, const std::string& value);
    ResultRecord& add(const std::string& key, long long value);
    ResultRecord& add(const std::string& key, unsigned long long value);
    ResultRecord& add_probability(const std::string& key, double value);
    ResultRecord& add_list(const std::string& key, const std::vector<std::string>& values);
    ResultRecord& add_indices(const std::string& key, const std::vector<int>& values);

    std::string line() const; // no trailing newline

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

} // namespace winprob

#endif
