#pragma once

#include <stdexcept>
#include <string>

namespace svt {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MixedParity : Error {
  explicit MixedParity(const std::string& w) : Error(w) {}
};
struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& w) : Error(w) {}
};
struct InvalidM : Error {
  explicit InvalidM(const std::string& w) : Error(w) {}
};
struct InvariantViolated : Error {
  explicit InvariantViolated(const std::string& w) : Error(w) {}
};
struct RankMismatch : Error {
  explicit RankMismatch(const std::string& w) : Error(w) {}
};
struct LegOutOfRange : Error {
  explicit LegOutOfRange(const std::string& w) : Error(w) {}
};
struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& w) : Error(w) {}
};
struct NonUnitLeadingTerm : Error {
  explicit NonUnitLeadingTerm(const std::string& w) : Error(w) {}
};
struct UnknownIdentity : Error {
  explicit UnknownIdentity(const std::string& w) : Error(w) {}
};
struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& w) : Error(w) {}
};
struct OrderTooLarge : Error {
  explicit OrderTooLarge(const std::string& w) : Error(w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

}  // namespace svt
