#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geodex {

enum class Errc {
  EndpointOutOfRange,
  LoopEdge,
  Disconnected,
  LevelOutOfRange,
  EmptySet,
  InvalidPermutation,
  DegreeMismatch,
  SeedNotInUniverse,
  NotTransitive,
  SetNotInvariant,
  BudgetExceeded,
  TupleBudgetExceeded,
  ParameterOutOfRange,
  InternalVerificationFailed,
  InvalidOrder,
  DesignInvariantViolated,
  CrossClassIntersectionNotConstant,
  NotAutomorphisms,
  HypothesisNotMet,
  InvalidPartition,
  UnknownName,
  BadParameter,
  ParseError,
  Overflow,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::EmptySet: return "EmptySet";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::SeedNotInUniverse: return "SeedNotInUniverse";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::SetNotInvariant: return "SetNotInvariant";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TupleBudgetExceeded: return "TupleBudgetExceeded";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::DesignInvariantViolated: return "DesignInvariantViolated";
    case Errc::CrossClassIntersectionNotConstant: return "CrossClassIntersectionNotConstant";
    case Errc::NotAutomorphisms: return "NotAutomorphisms";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace geodex
