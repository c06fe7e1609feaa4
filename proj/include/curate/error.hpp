#pragma once

#include <stdexcept>
#include <string>

namespace curate {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: flags, config values, out-of-range parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read, written or renamed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input file (embedding table, vector file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation has no defined result (empty or cancelling mean).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Remote scorer stayed unreachable after all retries.
class ScorerUnavailable : public Error {
 public:
  ScorerUnavailable(const std::string& what, std::size_t unsent)
      : Error(what), unsent_(unsent) {}
  std::size_t unsent() const noexcept { return unsent_; }

 private:
  std::size_t unsent_;
};

}  // namespace curate
