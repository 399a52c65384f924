#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcc {

// Malformed input text (edge lists, label files, manifests, partition files).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  explicit ParseError(const std::string& msg) : std::runtime_error(msg), line_(0) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A structurally invalid request: querying a non-edge, partitions over
// mismatched node sets, overlapping communities, and the like.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A metric whose value does not exist for the given input (m = 0 modularity,
// degenerate z-modularity denominator, ...). Callers report it as absent.
class UndefinedMetricError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcc
