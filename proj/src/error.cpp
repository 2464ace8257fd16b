#include "cantor/error.hpp"

namespace cantor {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::reducible_polynomial: return "ReduciblePolynomial";
    case Errc::no_real_root_in_interval: return "NoRealRootInInterval";
    case Errc::non_monic: return "NonMonic";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::malformed_spec: return "MalformedSpec";
    case Errc::digit_out_of_range: return "DigitOutOfRange";
    case Errc::invalid_delta_expansion: return "InvalidDeltaExpansion";
    case Errc::non_uniform_morphism: return "NonUniformMorphism";
    case Errc::out_of_unit_interval: return "OutOfUnitInterval";
    case Errc::state_cap_exceeded: return "StateCapExceeded";
    case Errc::point_out_of_range: return "PointOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::non_uniform_input: return "NonUniformInput";
    case Errc::not_pisot: return "NotPisot";
    case Errc::precision_exhausted: return "PrecisionExhausted";
    case Errc::usage_error: return "UsageError";
    case Errc::unknown_scenario: return "UnknownScenario";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace cantor
