#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siflag {

/// Stable error categories; the CLI uses the numeric value as its exit code.
enum class ErrorCode : int {
  parse = 1,
  limit = 2,
  assertion = 3,
  io = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input: bad expression text, unknown generator, invalid root datum.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(ErrorCode::parse, what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The t -> 0 limit does not exist or does not land in the expected ring.
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what) : Error(ErrorCode::limit, what) {}
};

/// An algebraic identity or membership condition that must hold did not.
class AssertionFailure : public Error {
 public:
  explicit AssertionFailure(const std::string& what)
      : Error(ErrorCode::assertion, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace siflag
