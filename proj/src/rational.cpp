#include "halfflat/rational.hpp"

#include "halfflat/errors.hpp"

namespace halfflat {

const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::unbound_parameter: return "UnboundParameter";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::degree_underflow: return "DegreeUnderflow";
    case errc::zero_volume: return "ZeroVolume";
    case errc::mixed_radicand: return "MixedRadicand";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_complex_type: return "NotComplexType";
    case errc::sqrt_not_representable: return "SqrtNotRepresentable";
    case errc::degenerate: return "Degenerate";
    case errc::not_a_complement: return "NotAComplement";
    case errc::zero_alpha: return "ZeroAlpha";
    case errc::zero_x: return "ZeroX";
    case errc::not_a_subalgebra: return "NotASubalgebra";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_abelian_ideal: return "NotAbelianIdeal";
    case errc::wrong_codimension: return "WrongCodimension";
    case errc::not_invariant: return "NotInvariant";
    case errc::non_rational_input: return "NonRationalInput";
    case errc::soundness_violation: return "SoundnessViolation";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

Rational rational(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return root;
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto num = integer_sqrt_exact(q.get_num());
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(q.get_den());
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail(errc::syntax_error, "empty rational literal");
  std::string body(text.substr(begin, end - begin + 1));
  // mpq_class accepts "p" and "p/q" but also silently accepts junk like "1/0".
  for (size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && i == 0);
    if (!ok) fail(errc::syntax_error, "bad rational literal '" + body + "'");
  }
  if (body == "-" || body.empty()) fail(errc::syntax_error, "bad rational literal '" + body + "'");
  size_t slash = body.find('/');
  if (slash != std::string_view::npos) {
    if (slash == 0 || slash + 1 == body.size() || body.find('/', slash + 1) != std::string::npos)
      fail(errc::syntax_error, "bad rational literal '" + body + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0)
    fail(errc::syntax_error, "bad rational literal '" + body + "'");
  if (sgn(Integer(q.get_den())) == 0) fail(errc::division_by_zero, "zero denominator in '" + body + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace halfflat
