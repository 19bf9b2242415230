#pragma once

#include <stdexcept>
#include <string>

namespace halfflat {

// Failure modes of the public operations. Names are kept stable because the
// CLI and the python layer report them verbatim.
enum class errc {
  syntax_error,
  unbound_parameter,
  unbound_variable,
  index_out_of_range,
  dimension_mismatch,
  degree_overflow,
  degree_underflow,
  zero_volume,
  mixed_radicand,
  division_by_zero,
  not_complex_type,
  sqrt_not_representable,
  degenerate,
  not_a_complement,
  zero_alpha,
  zero_x,
  not_a_subalgebra,
  not_an_ideal,
  not_abelian_ideal,
  wrong_codimension,
  not_invariant,
  non_rational_input,
  soundness_violation,
  invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace halfflat
