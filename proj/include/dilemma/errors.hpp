#pragma once

#include <stdexcept>
#include <string>

namespace dilemma {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The problem adapter broke its contract (e.g. a non-candidate state
/// with an empty action list).
class AdapterError : public Error {
 public:
  using Error::Error;
};

/// A search was requested with max_iterations = 0.
class BudgetZeroError : public Error {
 public:
  using Error::Error;
};

/// An argument fell outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An energy was requested for a state that is not a complete candidate.
class NotCandidateError : public Error {
 public:
  using Error::Error;
};

/// An action was applied to a state where it is not legal.
class IllegalActionError : public Error {
 public:
  using Error::Error;
};

/// Entropy of an empty label multiset.
class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

/// An attribute name/index that is not part of the schema.
class UnknownAttributeError : public Error {
 public:
  using Error::Error;
};

/// The knapsack DP table would exceed its configured cell limit.
class CapacityOverflowError : public Error {
 public:
  using Error::Error;
};

/// An exact oracle was asked to enumerate a space beyond its limit.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Split ratios do not form a valid partition of 1.
class RatioError : public Error {
 public:
  using Error::Error;
};

/// A dataset split would leave one part empty.
class TooFewRowsError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the 1-based line where parsing failed.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

/// A CSV row whose field count differs from the header.
class RaggedRowError : public ParseError {
 public:
  RaggedRowError(int line, const std::string& reason) : ParseError(line, reason) {}
};

/// Filesystem-level write/read failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dilemma
