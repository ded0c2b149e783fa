#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troplift {

enum class ErrorKind {
  InversionOfZero,
  ValuationUnknown,
  NegativeLeading,
  NestedRadical,
  NotQuadratic,
  SizeLimit,
  DimensionMismatch,
  RankTooHigh,
  InvalidTree,
  NotBarvinok2,
  NotCaterpillar,
  NotRank2,
  GenericRetryExhausted,
  SameSigns,
  DegenerateGeneric,
  MinorSignsOpposed,
  NotOnEdge,
  UnknownFixture,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace troplift
