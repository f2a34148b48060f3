#pragma once

#include <stdexcept>
#include <string>

namespace cellkit {

// Error taxonomy shared by all modules. The CLI maps categories to exit
// codes: scenario/validation problems -> 2, unmet mathematical
// preconditions -> 3, resource limits (budget, precision, window) -> 4.
enum class errc {
  validation,
  unknown_base_point,
  zero_argument,
  division_by_zero,
  empty_fiber,
  not_in_fiber,
  signature_depth,
  not_a_section,
  not_small,
  precondition,
  non_constant_ac1,
  non_uniform_tree,
  non_uniform_order,
  not_covering,
  not_subset_maximal,
  ambiguous_choice,
  window_mismatch,
  insufficient_precision,
  budget_exceeded,
  window_too_small,
  classes_not_balls,
};

const char* errc_name(errc c);
int errc_exit_code(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace cellkit
