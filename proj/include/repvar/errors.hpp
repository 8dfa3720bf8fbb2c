#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repvar {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REPVAR_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

REPVAR_DEFINE_ERROR(NotAField);
REPVAR_DEFINE_ERROR(ShapeError);
REPVAR_DEFINE_ERROR(UnknownVertex);
REPVAR_DEFINE_ERROR(NotAdmissible);
REPVAR_DEFINE_ERROR(QuiverMismatch);
REPVAR_DEFINE_ERROR(UnsupportedField);
REPVAR_DEFINE_ERROR(GenerationFailed);
REPVAR_DEFINE_ERROR(NotACocycle);
REPVAR_DEFINE_ERROR(NotARepresentation);
REPVAR_DEFINE_ERROR(FlagsRequired);
REPVAR_DEFINE_ERROR(BadParameters);

#undef REPVAR_DEFINE_ERROR

// A mathematical precondition of a procedure does not hold. These are
// structured refusals, not bugs.
class HypothesisFailed : public Error {
 public:
  HypothesisFailed(std::string item, const std::string& detail)
      : Error(item + ": " + detail), item_(std::move(item)) {}
  const std::string& item() const noexcept { return item_; }

 private:
  std::string item_;
};

class CertificateRefused : public HypothesisFailed {
 public:
  using HypothesisFailed::HypothesisFailed;
};

// An identity that must hold by theory failed; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace repvar
