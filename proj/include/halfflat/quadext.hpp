#pragma once

#include <optional>
#include <string>

#include "halfflat/rational.hpp"

namespace halfflat {

// Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)), d a square-free
// integer > 1.  Purely rational values carry d == 0 and combine with any
// radicand; two values with distinct nonzero radicands do not mix and any
// attempt raises mixed_radicand.  All comparisons and signs are exact.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}           // NOLINT: implicit by design
  QuadExt(long n) : a_(Rational(n)) {}            // NOLINT
  QuadExt(const Rational& a, const Rational& b, unsigned d);

  static QuadExt surd(unsigned d, const Rational& b = 1);

  const Rational& rat_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  unsigned radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return halfflat::is_zero(a_) && halfflat::is_zero(b_); }

  // Exact sign decided by case analysis on a, b and a^2 vs b^2 d.
  int sign() const;

  QuadExt operator-() const;
  QuadExt conjugate() const { return QuadExt::raw(a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  QuadExt inverse() const;
  double to_double() const;

  // Exact square root inside Q(sqrt(d)); `context_d` widens the search to a
  // radicand when *this is rational.  Absent when no such root exists.
  std::optional<QuadExt> sqrt_exact(unsigned context_d = 0) const;

  std::string str() const;

private:
  static QuadExt raw(Rational a, Rational b, unsigned d);

  Rational a_;
  Rational b_;
  unsigned d_ = 0;
};

inline int sign(const QuadExt& x) { return x.sign(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

bool is_squarefree(unsigned n);

// Merge the radicands of two operands; throws mixed_radicand on conflict.
unsigned merge_radicand(unsigned d1, unsigned d2);

} // namespace halfflat
