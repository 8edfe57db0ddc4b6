#pragma once

#include <stdexcept>
#include <string>

namespace amgecg {

/// Precondition or invariant violation (bad arguments, bad config, bad state).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class data_format_error : public std::runtime_error {
public:
    data_format_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Filesystem-level failure (missing file, unwritable path).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical breakdown (rank-deficient fit, undefined ratio).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched sampling rate / window between datasets that must agree.
class compatibility_error : public std::runtime_error {
public:
    explicit compatibility_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Referenced subject id is not enrolled.
class lookup_error : public std::runtime_error {
public:
    explicit lookup_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Enrollment could not produce a usable template.
class enrollment_error : public std::runtime_error {
public:
    explicit enrollment_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace amgecg
