#ifndef WINPROB_CLI_HPP
#define WINPROB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace winprob::cli {

// Runs one command. Returns the process exit code: 0 on success, 1 when a
// computation is refused (size limits, unsupported rules), 2 on input or
// usage errors. On success exactly one result record goes to `out`;
// diagnostics go to `err` and nothing is written to `out` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace winprob::cli

#endif
