#pragma once

#include <stdexcept>
#include <string>

namespace collective {

/// Argument outside the mathematical domain of an operation (index out of
/// range, |m| > j, negative time, mismatched qubit counts).
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {}
};

/// Malformed external input: truth tables, state files, trace files.
class FormatError : public std::runtime_error {
  public:
    explicit FormatError(const std::string &what) : std::runtime_error(what) {}
};

/// Bad command-line usage; maps to exit status 2.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace collective
