#pragma once

#include <stdexcept>
#include <string>

namespace qzeno {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct QubitOutOfRange : Error {
  using Error::Error;
};

struct KOutOfRange : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

// DIMACS parse failure; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct HeaderMismatch : Error {
  using Error::Error;
};

struct TooManyVariables : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct BasisMismatch : Error {
  using Error::Error;
};

struct EmptySubspace : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

}  // namespace qzeno
