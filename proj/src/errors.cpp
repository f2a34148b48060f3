#include "cellkit/errors.hpp"

namespace cellkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::validation: return "Validation";
    case errc::unknown_base_point: return "UnknownBasePoint";
    case errc::zero_argument: return "ZeroArgument";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::empty_fiber: return "EmptyFiber";
    case errc::not_in_fiber: return "NotInFiber";
    case errc::signature_depth: return "SignatureDepthExceeded";
    case errc::not_a_section: return "NotASection";
    case errc::not_small: return "NotSmall";
    case errc::precondition: return "PreconditionUnmet";
    case errc::non_constant_ac1: return "NonConstantAc1";
    case errc::non_uniform_tree: return "NonUniformTreeType";
    case errc::non_uniform_order: return "NonUniformOrder";
    case errc::not_covering: return "NotCovering";
    case errc::not_subset_maximal: return "NotSubsetMaximal";
    case errc::ambiguous_choice: return "AmbiguousChoice";
    case errc::window_mismatch: return "WindowMismatch";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::classes_not_balls: return "ClassesNotBalls";
  }
  return "Unknown";
}

int errc_exit_code(errc c) {
  switch (c) {
    case errc::validation:
    case errc::unknown_base_point:
      return 2;
    case errc::insufficient_precision:
    case errc::budget_exceeded:
    case errc::window_too_small:
    case errc::classes_not_balls:
      return 4;
    default:
      return 3;
  }
}

}  // namespace cellkit
