#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semidecay {

enum class Errc {
  unsupported_group,
  unsupported_representation,
  no_improvement,
  malformed_weight_set,
  rank_mismatch,
  degenerate_representation,
  not_excellent,
  unsupported_mechanism,
  unsupported_numeric_field,
  decomposition_failure,
  invalid_xi,
  invalid_input,
  trivial_element,
  invalid_parameter,
  vacuous_check,
  fit_failure,
};

/// CamelCase name of an error code, e.g. "NotExcellent".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace semidecay
