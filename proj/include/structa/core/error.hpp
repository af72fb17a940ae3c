#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace structa {

// Every precondition failure in the library is reported through Error with
// one of these codes. The witness, when present, names the smallest offending
// input found by the scan that raised it.
enum class Errc {
  InvalidSymbol,
  DuplicateSymbol,
  CarrierMismatch,
  NotTotal,
  CompositionMismatch,
  NotMonic,
  NotOnto,
  NotBijective,
  EmptyCarrier,
  EmptyFold,
  EmptyMember,
  EmptySubset,
  UnboundedChain,
  NotALattice,
  NotSemilattice,
  NotDualPair,
  NotMonotone,
  TooLarge,
  InvalidStructure,
  UnknownArrow,
  LawFailure,
  NotProduct,
  VarianceError,
  EndpointError,
  Mismatch,
  IncompatibleFamilies,
  NotIsomorphicRepresentations,
  NotSubgroup,
  NotNormal,
  IllDefinedQuotient,
  NotHomomorphism,
  NotAction,
  NotTransitive,
  WindowOverflow,
  ZeroDenominator,
  EmptyMemberInBase,
  MeetingConditionFailed,
  Degenerate,
  NotClosedFamily,
  NotCovering,
  NotAField,
  SyntaxError,
  SemanticError,
  UsageError,
};

inline constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidSymbol: return "InvalidSymbol";
    case Errc::DuplicateSymbol: return "DuplicateSymbol";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::NotTotal: return "NotTotal";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotOnto: return "NotOnto";
    case Errc::NotBijective: return "NotBijective";
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::EmptyFold: return "EmptyFold";
    case Errc::EmptyMember: return "EmptyMember";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::UnboundedChain: return "UnboundedChain";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotSemilattice: return "NotSemilattice";
    case Errc::NotDualPair: return "NotDualPair";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::UnknownArrow: return "UnknownArrow";
    case Errc::LawFailure: return "LawFailure";
    case Errc::NotProduct: return "NotProduct";
    case Errc::VarianceError: return "VarianceError";
    case Errc::EndpointError: return "EndpointError";
    case Errc::Mismatch: return "Mismatch";
    case Errc::IncompatibleFamilies: return "IncompatibleFamilies";
    case Errc::NotIsomorphicRepresentations: return "NotIsomorphicRepresentations";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::IllDefinedQuotient: return "IllDefinedQuotient";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::NotAction: return "NotAction";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::EmptyMemberInBase: return "EmptyMemberInBase";
    case Errc::MeetingConditionFailed: return "MeetingConditionFailed";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotClosedFamily: return "NotClosedFamily";
    case Errc::NotCovering: return "NotCovering";
    case Errc::NotAField: return "NotAField";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                           (witness.empty() ? "" : " [witness: " + witness + "]")),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

}  // namespace structa
