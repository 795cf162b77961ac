#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

/// Failure codes for every checked precondition and validation in the library.
enum class errc {
  element_out_of_range,
  missing_universe_set,
  missing_empty_set,
  family_too_large,
  family_too_large_for_enumeration,
  family_mismatch,
  not_monotone,
  empty_not_zero,
  total_mass_zero,
  negative_value,
  not_finite,
  infinite_total_mass,
  not_complement_closed,
  illegal_conditional_set,
  nonzero_at_x,
  fn_exceeds_ybar,
  not_idempotent,
  not_capacity,
  dominance_violated,
  shape_mismatch,
  empty_atom,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::element_out_of_range: return "element_out_of_range";
    case errc::missing_universe_set: return "missing_universe_set";
    case errc::missing_empty_set: return "missing_empty_set";
    case errc::family_too_large: return "family_too_large";
    case errc::family_too_large_for_enumeration: return "family_too_large_for_enumeration";
    case errc::family_mismatch: return "family_mismatch";
    case errc::not_monotone: return "not_monotone";
    case errc::empty_not_zero: return "empty_not_zero";
    case errc::total_mass_zero: return "total_mass_zero";
    case errc::negative_value: return "negative_value";
    case errc::not_finite: return "not_finite";
    case errc::infinite_total_mass: return "infinite_total_mass";
    case errc::not_complement_closed: return "not_complement_closed";
    case errc::illegal_conditional_set: return "illegal_conditional_set";
    case errc::nonzero_at_x: return "nonzero_at_x";
    case errc::fn_exceeds_ybar: return "fn_exceeds_ybar";
    case errc::not_idempotent: return "not_idempotent";
    case errc::not_capacity: return "not_capacity";
    case errc::dominance_violated: return "dominance_violated";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::empty_atom: return "empty_atom";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace choquet
