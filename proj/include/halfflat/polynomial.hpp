#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfflat/errors.hpp"
#include "halfflat/quadext.hpp"
#include "halfflat/rational.hpp"

namespace halfflat {

// Power product of variables, stored sparsely as (variable id, exponent)
// pairs sorted by id.  No zero exponents are kept.
class Monomial {
public:
  using Factor = std::pair<uint32_t, uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(uint32_t id, uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  uint64_t degree() const;
  uint32_t exponent(uint32_t id) const;

  Monomial operator*(const Monomial& other) const;
  // Componentwise quotient; absent when not divisible.
  std::optional<Monomial> divide(const Monomial& other) const;
  // Half of every exponent; absent when any exponent is odd.
  std::optional<Monomial> sqrt() const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors_ == y.factors_; }
  friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order: higher total degree first, ties broken
// lexicographically with the smallest variable id most significant.
bool grlex_less(const Monomial& x, const Monomial& y);

struct GrlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const { return grlex_less(y, x); }
};

// Sparse multivariate polynomial over Q.  Terms are kept grlex-descending so
// begin() is the leading term; zero coefficients are never stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(uint32_t id);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  uint64_t total_degree() const; // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  const std::pair<const Monomial, Rational>& leading_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  // Exact evaluation; every variable occurring in the polynomial must be
  // bound or unbound_variable is raised.  S is any commutative ring type
  // with +, * and construction from Rational.
  template <class S>
  S eval(const std::map<uint32_t, S>& point) const {
    S acc{};
    for (const auto& [mono, coeff] : terms_) {
      S term{coeff};
      for (const auto& [id, exp] : mono.factors()) {
        auto it = point.find(id);
        if (it == point.end())
          fail(errc::unbound_variable, "variable #" + std::to_string(id) + " has no binding");
        for (uint32_t e = 0; e < exp; ++e) term = term * it->second;
      }
      acc = acc + term;
    }
    return acc;
  }

  // Square root certificate: returns q with q*q == *this and positive leading
  // coefficient, or absent.  The candidate is produced by leading-term
  // extraction under grlex and then checked by one exact multiplication, so a
  // present result is always a valid certificate.
  std::optional<Polynomial> square_root() const;

  std::string str(const std::function<std::string(uint32_t)>& var_name) const;

private:
  TermMap terms_;
};

// Names for polynomial variables.  Ids are dense indices into the table.
class VarTable {
public:
  uint32_t intern(const std::string& name);
  std::optional<uint32_t> find(const std::string& name) const;
  const std::string& name(uint32_t id) const;
  size_t size() const { return names_.size(); }

private:
  std::vector<std::string> names_;
  std::map<std::string, uint32_t> ids_;
};

// Parses sums of terms like "3/2*x^2*y - y + 4".  Unknown names are interned
// into `vars`.
Polynomial parse_polynomial(std::string_view text, VarTable& vars);

} // namespace halfflat
