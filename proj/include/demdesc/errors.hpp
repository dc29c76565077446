#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace demdesc {

/**
 * Domain error with a stable machine-readable code. The CLI surfaces these
 * as JSON objects {"error": code, "detail": message} on stderr with exit
 * code 1; usage errors exit with 2 instead.
 */
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct InvalidType : Error {
  explicit InvalidType(const std::string& d) : Error("InvalidType", d) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& d) : Error("IndexOutOfRange", d) {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& d) : Error("RankMismatch", d) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& d) : Error("GroupTooLarge", d) {}
};

struct WordSpaceTooLarge : Error {
  explicit WordSpaceTooLarge(const std::string& d) : Error("WordSpaceTooLarge", d) {}
};

struct WordTooLong : Error {
  explicit WordTooLong(const std::string& d) : Error("WordTooLong", d) {}
};

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& d) : Error("NotDivisible", d) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& d) : Error("DivisionByZero", d) {}
};

struct EmptyCharacter : Error {
  explicit EmptyCharacter(const std::string& d) : Error("EmptyCharacter", d) {}
};

struct NotDominant : Error {
  explicit NotDominant(const std::string& d) : Error("NotDominant", d) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& d) : Error("ParseError", d) {}
};

struct IoError : Error {
  explicit IoError(const std::string& d) : Error("IoError", d) {}
};

}  // namespace demdesc
