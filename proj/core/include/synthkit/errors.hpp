#pragma once

#include <stdexcept>
#include <string>

namespace synthkit {

// Base class for all synthkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- molecule / SMILES layer ---

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

class ValenceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// --- reaction template layer ---

class MappingError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  using Error::Error;
};

// --- synthetic tree environment ---

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class ReplayDivergence : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// --- data generation ---

class InsufficientYield : public Error {
 public:
  using Error::Error;
};

// --- neural nets / retrieval ---

class CompatibilityError : public Error {
 public:
  using Error::Error;
};

class NonFiniteLoss : public Error {
 public:
  using Error::Error;
};

class EmptyCandidateSet : public Error {
 public:
  using Error::Error;
};

// --- metrics ---

class EmptyAfterExclusion : public Error {
 public:
  using Error::Error;
};

class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

// --- optimizer ---

class OracleFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace synthkit
