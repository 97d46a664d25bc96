#pragma once

#include <stdexcept>
#include <string>

namespace youngrep {

/// Malformed textual input (permutation, partition, tableau, flag value).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A size limit was exceeded, or a combination that only exists for one
/// degree was requested for another (the S_4 fixture basis order).
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The brute-force verifier reached a state that indicates a bug upstream.
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace youngrep
