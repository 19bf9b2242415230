#include "halfflat/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace halfflat {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& [id, exp] : factors_) {
    if (!merged.empty() && merged.back().first == id)
      merged.back().second += exp;
    else if (exp > 0)
      merged.push_back({id, exp});
  }
  factors_ = std::move(merged);
}

Monomial Monomial::variable(uint32_t id, uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({id, exp});
  return m;
}

uint64_t Monomial::degree() const {
  uint64_t d = 0;
  for (const auto& [id, exp] : factors_) d += exp;
  return d;
}

uint32_t Monomial::exponent(uint32_t id) const {
  for (const auto& [vid, exp] : factors_)
    if (vid == id) return exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto b = other.factors_.begin();
  for (const auto& [id, exp] : factors_) {
    uint32_t sub = 0;
    while (b != other.factors_.end() && b->first < id) return std::nullopt; // divisor has extra var
    if (b != other.factors_.end() && b->first == id) {
      sub = b->second;
      ++b;
    }
    if (sub > exp) return std::nullopt;
    if (exp > sub) out.factors_.push_back({id, exp - sub});
  }
  if (b != other.factors_.end()) return std::nullopt;
  return out;
}

std::optional<Monomial> Monomial::sqrt() const {
  Monomial out;
  for (const auto& [id, exp] : factors_) {
    if (exp % 2 != 0) return std::nullopt;
    out.factors_.push_back({id, exp / 2});
  }
  return out;
}

bool grlex_less(const Monomial& x, const Monomial& y) {
  uint64_t dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  // Same degree: lexicographic with x1 > x2 > ...; the first id where the
  // exponents differ decides, larger exponent on the earlier id wins.
  auto a = x.factors().begin();
  auto b = y.factors().begin();
  while (a != x.factors().end() && b != y.factors().end()) {
    if (a->first != b->first) return a->first > b->first; // missing var = exponent 0
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return false; // equal (same degree and factors)
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(uint32_t id) {
  Polynomial p;
  p.add_term(Monomial::variable(id), 1);
  return p;
}

uint64_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) fail(errc::invalid_argument, "leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (halfflat::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (halfflat::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out += q;
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out -= q;
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (halfflat::is_zero(c)) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

std::optional<Polynomial> Polynomial::square_root() const {
  if (is_zero()) return Polynomial();
  const auto& [lm, lc] = leading_term();
  if (sgn(lc) < 0) return std::nullopt;
  auto lc_root = rational_sqrt_exact(lc);
  if (!lc_root) return std::nullopt;
  auto lm_root = lm.sqrt();
  if (!lm_root) return std::nullopt;
  // Cheap reject via the trailing term, which must also be a square.
  const auto& [tm, tc] = *terms_.rbegin();
  if (sgn(tc) < 0 || !tm.sqrt() || !rational_sqrt_exact(tc)) return std::nullopt;

  Polynomial q;
  q.add_term(*lm_root, *lc_root);
  Polynomial rem = *this - q * q;
  Rational two_lc = Rational(2) * *lc_root;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    auto quot = rm.divide(*lm_root);
    if (!quot) return std::nullopt;
    if (!grlex_less(*quot, *lm_root)) return std::nullopt; // candidate would not shrink
    Polynomial t;
    t.add_term(*quot, rc / two_lc);
    // rem -= t (2q + t), keeping rem == *this - (q+t)^2 without re-squaring.
    Polynomial twice_q_plus_t = q + q + t;
    rem -= t * twice_q_plus_t;
    q += t;
  }
  if (!(q * q == *this)) return std::nullopt; // mandatory certificate check
  return q;
}

std::string Polynomial::str(const std::function<std::string(uint32_t)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational abs_c = (sgn(c) < 0) ? Rational(-c) : c;
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += (sgn(c) < 0) ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [id, exp] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += var_name(id);
      if (exp > 1) mono += "^" + std::to_string(exp);
    }
    if (mono.empty())
      out += to_string(abs_c);
    else if (abs_c == Rational(1))
      out += mono;
    else
      out += to_string(abs_c) + "*" + mono;
  }
  return out;
}

uint32_t VarTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

std::optional<uint32_t> VarTable::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& VarTable::name(uint32_t id) const {
  if (id >= names_.size()) fail(errc::unbound_variable, "unknown variable id " + std::to_string(id));
  return names_[id];
}

namespace {

struct PolyParser {
  std::string_view text;
  size_t pos = 0;
  VarTable& vars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Rational parse_uint_rational() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(errc::syntax_error, "expected number at offset " + std::to_string(pos));
    std::string num(text.substr(start, pos - start));
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail(errc::syntax_error, "expected denominator at offset " + std::to_string(pos));
      return parse_rational(num + "/" + std::string(text.substr(dstart, pos - dstart)));
    }
    return parse_rational(num);
  }

  Polynomial parse_factor() {
    if (eat('(')) {
      Polynomial inner = parse_expr();
      if (!eat(')')) fail(errc::syntax_error, "missing ')'");
      return maybe_power(inner);
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return maybe_power(Polynomial::constant(parse_uint_rational()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      return maybe_power(Polynomial::variable(vars.intern(name)));
    }
    fail(errc::syntax_error, "unexpected character at offset " + std::to_string(pos));
  }

  Polynomial maybe_power(Polynomial base) {
    if (!eat('^')) return base;
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(errc::syntax_error, "expected exponent at offset " + std::to_string(pos));
    unsigned long e = std::stoul(std::string(text.substr(start, pos - start)));
    Polynomial out = Polynomial::constant(1);
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  Polynomial parse_term() {
    Polynomial out = parse_factor();
    while (true) {
      if (eat('*'))
        out = out * parse_factor();
      else if (eat('/'))
        out = out.scaled(Rational(1) / require_constant(parse_factor()));
      else
        break;
    }
    return out;
  }

  Rational require_constant(const Polynomial& p) {
    if (p.is_zero()) fail(errc::division_by_zero, "division by zero");
    if (p.term_count() != 1 || !p.terms().begin()->first.is_one())
      fail(errc::syntax_error, "division by a non-constant");
    return p.terms().begin()->second;
  }

  Polynomial parse_expr() {
    Polynomial out;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial term = parse_term();
    out = negate ? -term : term;
    while (true) {
      if (eat('+'))
        out += parse_term();
      else if (eat('-'))
        out -= parse_term();
      else
        break;
    }
    return out;
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, VarTable& vars) {
  PolyParser parser{text, 0, vars};
  Polynomial p = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    fail(errc::syntax_error, "trailing input at offset " + std::to_string(parser.pos));
  return p;
}

} // namespace halfflat
