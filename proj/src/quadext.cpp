#include "halfflat/quadext.hpp"

#include <cmath>

#include "halfflat/errors.hpp"

namespace halfflat {

bool is_squarefree(unsigned n) {
  if (n == 0) return false;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

unsigned merge_radicand(unsigned d1, unsigned d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2)
    fail(errc::mixed_radicand,
         "cannot combine sqrt(" + std::to_string(d1) + ") with sqrt(" + std::to_string(d2) + ")");
  return d1;
}

QuadExt QuadExt::raw(Rational a, Rational b, unsigned d) {
  QuadExt x;
  x.a_ = std::move(a);
  x.b_ = std::move(b);
  x.d_ = halfflat::is_zero(x.b_) ? 0 : d;
  return x;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, unsigned d) {
  if (!halfflat::is_zero(b)) {
    if (d < 2 || !is_squarefree(d))
      fail(errc::mixed_radicand, "radicand must be square-free and > 1, got " + std::to_string(d));
  }
  *this = raw(a, b, d);
}

QuadExt QuadExt::surd(unsigned d, const Rational& b) { return QuadExt(Rational(0), b, d); }

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d exactly.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(static_cast<long>(d_));
  int c = cmp(lhs, rhs);
  if (c == 0) return 0; // unreachable for square-free d, kept for safety
  return (c > 0) ? sa : sb;
}

QuadExt QuadExt::operator-() const { return raw(-a_, -b_, d_); }

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  unsigned d = merge_radicand(x.d_, y.d_);
  return QuadExt::raw(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  unsigned d = merge_radicand(x.d_, y.d_);
  return QuadExt::raw(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  unsigned d = merge_radicand(x.d_, y.d_);
  Rational rad(static_cast<long>(d));
  return QuadExt::raw(x.a_ * y.a_ + x.b_ * y.b_ * rad, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  if (d_ == 0) return QuadExt(Rational(1) / a_);
  // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm is nonzero since
  // sqrt(d) is irrational.
  Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_));
  return raw(a_ / norm, -b_ / norm, d_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

double QuadExt::to_double() const {
  double v = a_.get_d();
  if (sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::optional<QuadExt> QuadExt::sqrt_exact(unsigned context_d) const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return QuadExt();
  if (d_ == 0) {
    if (auto r = rational_sqrt_exact(a_)) return QuadExt(*r);
    if (context_d >= 2) {
      // a = y^2 d  =>  sqrt(a) = y sqrt(d)
      if (auto y = rational_sqrt_exact(a_ / Rational(static_cast<long>(context_d))))
        return QuadExt(Rational(0), *y, context_d);
    }
    return std::nullopt;
  }
  // (x + y sqrt d)^2 = x^2 + y^2 d + 2xy sqrt d:  x^2 and y^2 d are the roots
  // of t^2 - a t + b^2 d / 4, so the discriminant a^2 - b^2 d must be a square.
  Rational rad(static_cast<long>(d_));
  auto s = rational_sqrt_exact(a_ * a_ - b_ * b_ * rad);
  if (!s) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rational t = (pick == 0) ? (a_ + *s) / 2 : (a_ - *s) / 2;
    auto x = rational_sqrt_exact(t);
    if (!x || halfflat::is_zero(*x)) continue;
    Rational y = b_ / (Rational(2) * *x);
    QuadExt root = raw(*x, y, d_);
    if (root * root == *this) return (root.sign() >= 0) ? root : -root;
  }
  return std::nullopt;
}

std::string QuadExt::str() const {
  if (d_ == 0) return to_string(a_);
  std::string surd;
  if (b_ == Rational(1))
    surd = "sqrt(" + std::to_string(d_) + ")";
  else if (b_ == Rational(-1))
    surd = "-sqrt(" + std::to_string(d_) + ")";
  else
    surd = to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
  if (halfflat::is_zero(a_)) return surd;
  if (sgn(b_) > 0) return to_string(a_) + "+" + surd;
  return to_string(a_) + surd; // the surd part carries its own minus sign
}

} // namespace halfflat
