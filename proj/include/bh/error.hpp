#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bh {

enum class ErrorCode {
  Parse,
  UnknownVariable,
  DuplicateMonomial,
  MonomialCountMismatch,
  ZeroDeterminant,
  NonIntegralWeights,
  NonPositiveWeights,
  NonPositiveQ0,
  NonIntegralExponent,
  InexactDivision,
  NotCyclotomic,
  NonIntegralMilnorNumber,
  HypothesisNotMet,
  InvalidRange,
  NotFactorable,
  MissingAttachment,
  UnknownNode,
  DimensionMismatch,
  CaseMismatch,
  NotARoot,
  NotARootBasis,
  NotSymmetric,
  MissingConvention,
  CalibrationFailed,
  UnknownFixture,
  InvalidFixture,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Raised by the polynomial parser; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, const std::string& what, std::size_t position)
    : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bh
