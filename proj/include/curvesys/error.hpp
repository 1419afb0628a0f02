#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvesys {

enum class ErrorKind {
  unsupported_cut,
  not_non_orientable,
  invalid_surface,
  unsupported_surface,
  pole_input,
  identity_map,
  parabolic_class,
  trivial_word,
  arc_input,
  not_certified,
  inessential_input,
  same_class,
  too_large,
  uncertified,
  invalid_member,
  bad_t,
  budget_exceeded,
  no_chord_data,
  unsupported_query,
  singular_denominator,
  negative_radicand,
  pole_at_d,
  not_smooth,
  violation_found,
  no_root_in_range,
  precondition,
  horocycle_too_large,
  parse_error,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unsupported_cut: return "UnsupportedCut";
    case ErrorKind::not_non_orientable: return "NotNonOrientable";
    case ErrorKind::invalid_surface: return "InvalidSurface";
    case ErrorKind::unsupported_surface: return "UnsupportedSurface";
    case ErrorKind::pole_input: return "PoleInput";
    case ErrorKind::identity_map: return "IdentityMap";
    case ErrorKind::parabolic_class: return "ParabolicClass";
    case ErrorKind::trivial_word: return "TrivialWord";
    case ErrorKind::arc_input: return "ArcInput";
    case ErrorKind::not_certified: return "NotCertified";
    case ErrorKind::inessential_input: return "InessentialInput";
    case ErrorKind::same_class: return "SameClass";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::uncertified: return "Uncertified";
    case ErrorKind::invalid_member: return "InvalidMember";
    case ErrorKind::bad_t: return "BadT";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::no_chord_data: return "NoChordData";
    case ErrorKind::unsupported_query: return "UnsupportedQuery";
    case ErrorKind::singular_denominator: return "SingularDenominator";
    case ErrorKind::negative_radicand: return "NegativeRadicand";
    case ErrorKind::pole_at_d: return "PoleAtD";
    case ErrorKind::not_smooth: return "NotSmooth";
    case ErrorKind::violation_found: return "ViolationFound";
    case ErrorKind::no_root_in_range: return "NoRootInRange";
    case ErrorKind::precondition: return "Precondition";
    case ErrorKind::horocycle_too_large: return "HorocycleTooLarge";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `kind()` is the stable discriminator.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvesys
