#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace a2g {

/// Input outside the mathematical domain of an operation (negative height,
/// gamma <= 0, elevation angle outside [0, 90], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lookup outside the sampled support of a tabulated pattern. No extrapolation.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed pattern or trace file. `line()` is 1-based, 0 when the error is
/// not tied to a line (empty file, unreadable path).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + what
                                    : source + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// The RSS is below floor (-inf) over the whole search range.
class NoMaximumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedCombinationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A trace with no finite samples where one is required.
class EmptyTraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComparisonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a2g
