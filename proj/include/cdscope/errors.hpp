#pragma once

#include <stdexcept>
#include <string>

namespace cdscope {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, unknown families, non-bijective
/// permutations, unreadable corpus lines. CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

/// An operation was called outside its contract (e.g. normal closure with
/// H not contained in K). CLI exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded (group order, permutation points,
/// subgroup count, corpus budget). CLI exit code 3.
struct SizeError : Error {
  using Error::Error;
};

/// Syntax error in the group-expression language; carries the source
/// position of the offending token.
struct ParseError : ValidationError {
  ParseError(const std::string& msg, int line, int col, int begin, int end)
      : ValidationError(msg), line(line), col(col), begin(begin), end(end) {}
  int line;
  int col;
  int begin;  // byte offsets into the input, [begin,end)
  int end;
};

/// A verified mathematical identity failed to hold. This indicates a bug in
/// the kernel, never a property of the input group. CLI exit code 1.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace cdscope
