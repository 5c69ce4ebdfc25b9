#ifndef WINPROB_ERRORS_HPP
#define WINPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace winprob {

// Invalid input data or parameters (malformed profile, index out of range,
// rule parameters that do not fit the candidate count, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (profile / graph / set-system files).
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& what) : ValidationError(what) {}
};

// A computation was refused because it exceeds a configured size limit
// (brute-force voter limits, DP table budgets).
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is not defined for the given voting rule.
class UnsupportedRuleError : public std::runtime_error {
public:
    explicit UnsupportedRuleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace winprob

#endif
