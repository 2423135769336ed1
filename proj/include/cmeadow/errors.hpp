#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmeadow {

/// Base class of every error raised by the library. Errors signal misuse of
/// the artifact; the peripheral value bot is a value, never an error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// EXACT carrier asked for log2 of a positive rational that is not 2^k.
class InexactError : public Error {
 public:
  using Error::Error;
};

/// APPROX carrier produced a non-finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A value that is not legal under the active mode (e.g. +inf outside SIGNED).
class IllegalValueError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbolError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class InvalidPmfError : public Error {
 public:
  using Error::Error;
};

class LabelMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidVariantError : public Error {
 public:
  using Error::Error;
};

class UnknownSuiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmeadow
