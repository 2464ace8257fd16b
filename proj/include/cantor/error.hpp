#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

enum class Errc {
  reducible_polynomial,
  no_real_root_in_interval,
  non_monic,
  division_by_zero,
  field_mismatch,
  malformed_spec,
  digit_out_of_range,
  invalid_delta_expansion,
  non_uniform_morphism,
  out_of_unit_interval,
  state_cap_exceeded,
  point_out_of_range,
  parse_error,
  non_uniform_input,
  not_pisot,
  precision_exhausted,
  usage_error,
  unknown_scenario,
};

const char* errc_name(Errc code);

// Every domain failure of the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cantor
