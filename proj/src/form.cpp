#include "halfflat/form.hpp"

#include <cctype>

namespace halfflat {

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 1; i <= 9; ++i)
    if (m & (IndexMask(1) << (i - 1))) out.push_back(i);
  return out;
}

IndexMask mask_from_indices(const std::vector<int>& indices, int dim) {
  IndexMask m = 0;
  int prev = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > dim)
      fail(errc::index_out_of_range, "index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
    if (idx <= prev) fail(errc::syntax_error, "indices must be strictly increasing");
    m |= IndexMask(1) << (idx - 1);
    prev = idx;
  }
  return m;
}

std::string mask_str(IndexMask m) {
  if (m == 0) return "1";
  std::string s = "e";
  for (int idx : mask_indices(m)) s += static_cast<char>('0' + idx);
  return s;
}

int merge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int swaps = 0;
  IndexMask rest = b;
  while (rest) {
    IndexMask low = rest & static_cast<IndexMask>(-rest);
    // indices of a that are larger than this element of b
    swaps += std::popcount(static_cast<unsigned>(a & ~static_cast<IndexMask>((low << 1) - 1)));
    rest = static_cast<IndexMask>(rest & (rest - 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

bool tuple_lex_less(IndexMask a, IndexMask b) {
  while (a && b) {
    IndexMask la = a & static_cast<IndexMask>(-a);
    IndexMask lb = b & static_cast<IndexMask>(-b);
    if (la != lb) return la < lb;
    a = static_cast<IndexMask>(a & (a - 1));
    b = static_cast<IndexMask>(b & (b - 1));
  }
  return a == 0 && b != 0;
}

std::vector<IndexMask> tuples_lex(int n, int k) {
  std::vector<IndexMask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(mask_from_indices(idx, n));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (k == 0) out = {IndexMask(0)};
  return out;
}

Form<double> to_double_form(const Form<QuadExt>& f) {
  Form<double> out(f.dim(), f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c.to_double());
  return out;
}

std::vector<double> to_double_vector(const std::vector<QuadExt>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Rational require_rational(const QuadExt& x) {
  if (!x.is_rational())
    fail(errc::non_rational_input, "value " + x.str() + " is not rational");
  return x.rat_part();
}

Form<Polynomial> to_polynomial_form(const Form<QuadExt>& f) {
  Form<Polynomial> out(f.dim(), f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, Polynomial::constant(require_rational(c)));
  return out;
}

Form<QuadExt> eval_form(const Form<Polynomial>& f, const std::map<uint32_t, QuadExt>& point) {
  Form<QuadExt> out(f.dim(), f.degree());
  for (const auto& [m, p] : f.terms()) out.add_term(m, p.eval(point));
  return out;
}

namespace {

struct ScalarParser {
  std::string_view text;
  size_t pos = 0;
  const FieldSpec& field;
  const std::map<std::string, QuadExt>& params;

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
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  std::string read_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(errc::syntax_error, "expected integer at offset " + std::to_string(pos));
    return std::string(text.substr(start, pos - start));
  }

  std::string read_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  // factor := uint | uint '/' uint | sqrt '(' uint ')' | param-name
  QuadExt parse_scalar_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return QuadExt(parse_rational(read_uint()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident = read_ident();
      if (ident == "sqrt") {
        if (!eat('(')) fail(errc::syntax_error, "expected '(' after sqrt");
        std::string num = read_uint();
        if (!eat(')')) fail(errc::syntax_error, "expected ')' after sqrt radicand");
        if (!field.allow_surd) fail(errc::syntax_error, "surd literal not allowed over field q");
        unsigned d = static_cast<unsigned>(std::stoul(num));
        if (d < 2 || !is_squarefree(d))
          fail(errc::mixed_radicand, "radicand must be square-free and > 1, got " + num);
        if (field.radicand != 0 && field.radicand != d)
          fail(errc::mixed_radicand, "radicand " + num + " conflicts with the active field");
        return QuadExt::surd(d);
      }
      auto it = params.find(ident);
      if (it == params.end()) fail(errc::unbound_parameter, "parameter '" + ident + "' is not bound");
      return it->second;
    }
    fail(errc::syntax_error, std::string("unexpected character '") + c + "'");
  }

  // scalar := [sign] factor {('*'|'/') factor}
  QuadExt parse_scalar_value() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    QuadExt value = parse_scalar_factor();
    while (true) {
      if (eat('*'))
        value *= parse_scalar_factor();
      else if (eat('/'))
        value /= parse_scalar_factor();
      else
        break;
    }
    return neg ? -value : value;
  }
};

// One wedge monomial "e126" or "e1^e2^e6"; returns mask and sign.
std::pair<IndexMask, int> parse_eterm(ScalarParser& p, int dim) {
  auto read_indices = [&]() {
    if (!p.eat('e')) fail(errc::syntax_error, "expected basis term at offset " + std::to_string(p.pos));
    std::vector<int> idx;
    while (p.pos < p.text.size() && std::isdigit(static_cast<unsigned char>(p.text[p.pos]))) {
      idx.push_back(p.text[p.pos] - '0');
      ++p.pos;
    }
    if (idx.empty()) fail(errc::syntax_error, "basis term without indices");
    return idx;
  };

  IndexMask mask = 0;
  int sign = 1;
  bool first = true;
  do {
    std::vector<int> idx = read_indices();
    IndexMask part = 0;
    int prev = 0;
    for (int i : idx) {
      if (i < 1 || i > dim)
        fail(errc::index_out_of_range,
             "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
      if (i <= prev) fail(errc::syntax_error, "repeated or decreasing index in basis term");
      part |= IndexMask(1) << (i - 1);
      prev = i;
    }
    if (first) {
      mask = part;
      first = false;
    } else {
      int s = merge_sign(mask, part);
      if (s == 0) fail(errc::syntax_error, "repeated index in basis term");
      sign *= s;
      mask = static_cast<IndexMask>(mask | part);
    }
  } while (p.eat('^'));
  return {mask, sign};
}

} // namespace

QuadExt parse_scalar(std::string_view text, const FieldSpec& field,
                     const std::map<std::string, QuadExt>& params) {
  ScalarParser p{text, 0, field, params};
  QuadExt v = p.parse_scalar_value();
  if (!p.at_end()) fail(errc::syntax_error, "trailing input in scalar literal");
  return v;
}

Form<QuadExt> parse_form(std::string_view text, int dim, int expected_degree,
                         const FieldSpec& field, const std::map<std::string, QuadExt>& params) {
  ScalarParser p{text, 0, field, params};
  struct Term {
    QuadExt coeff;
    IndexMask mask;
  };
  std::vector<Term> terms;
  bool all_zero_scalar = false;

  bool first_term = true;
  while (!p.at_end()) {
    int sign = 1;
    if (p.eat('-'))
      sign = -1;
    else if (!p.eat('+') && !first_term)
      fail(errc::syntax_error, "expected '+' or '-' between terms");
    first_term = false;

    QuadExt coeff(Rational(1));
    char c = p.peek();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (std::isalpha(static_cast<unsigned char>(c)) && c != 'e') || c == '_') {
      coeff = p.parse_scalar_factor();
      have_coeff = true;
      while (p.eat('/')) coeff /= p.parse_scalar_factor();
    } else if (c == 'e' && p.pos + 1 < p.text.size() &&
               !std::isdigit(static_cast<unsigned char>(p.text[p.pos + 1]))) {
      // identifier starting with 'e' that is not a basis term
      coeff = p.parse_scalar_factor();
      have_coeff = true;
    }

    if (have_coeff) {
      if (p.eat('*')) {
        // fall through to basis term; more scalar factors may precede it
        while (true) {
          char nc = p.peek();
          bool basis_next = (nc == 'e' && p.pos + 1 < p.text.size() &&
                             std::isdigit(static_cast<unsigned char>(p.text[p.pos + 1])));
          if (basis_next) break;
          coeff *= p.parse_scalar_factor();
          while (p.eat('/')) coeff /= p.parse_scalar_factor();
          if (!p.eat('*')) fail(errc::syntax_error, "expected '*' before basis term");
        }
      } else {
        // a pure scalar term: only the literal 0 is a valid form term
        if (!coeff.is_zero())
          fail(errc::syntax_error, "scalar term without basis factor");
        all_zero_scalar = true;
        continue;
      }
    }

    auto [mask, psign] = parse_eterm(p, dim);
    QuadExt value = coeff;
    if (sign * psign < 0) value = -value;
    terms.push_back({value, mask});
  }

  int degree = expected_degree;
  if (degree < 0) {
    if (terms.empty()) {
      if (!all_zero_scalar) fail(errc::syntax_error, "empty form expression");
      degree = 0;
    } else {
      degree = mask_degree(terms.front().mask);
    }
  }
  Form<QuadExt> out(dim, degree);
  for (const auto& t : terms) {
    if (mask_degree(t.mask) != degree)
      fail(errc::degree_overflow, "mixed degrees in form expression");
    out.add_term(t.mask, t.coeff);
  }
  return out;
}

std::vector<QuadExt> parse_vector(std::string_view text, int dim, const FieldSpec& field,
                                  const std::map<std::string, QuadExt>& params) {
  Form<QuadExt> f = parse_form(text, dim, 1, field, params);
  std::vector<QuadExt> v(dim);
  for (const auto& [m, c] : f.terms()) {
    int idx = mask_indices(m)[0];
    v[idx - 1] = c;
  }
  return v;
}

namespace {

// Renders c as a prefix of one wedge monomial; |c| must not be zero.
void append_scalar_term(std::string& out, bool& first, const QuadExt& c, const std::string& mono) {
  int s = c.sign();
  QuadExt abs_c = (s < 0) ? -c : c;
  if (first) {
    if (s < 0) out += "-";
    first = false;
  } else {
    out += (s < 0) ? " - " : " + ";
  }
  if (abs_c == QuadExt(Rational(1))) {
    out += mono;
    return;
  }
  std::string cs;
  if (abs_c.is_rational())
    cs = to_string(abs_c.rat_part());
  else if (abs_c.surd_part() == Rational(1))
    cs = "sqrt(" + std::to_string(abs_c.radicand()) + ")";
  else
    cs = to_string(abs_c.surd_part()) + "*sqrt(" + std::to_string(abs_c.radicand()) + ")";
  out += cs + "*" + mono;
}

} // namespace

std::string form_str(const Form<QuadExt>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = mask_str(m);
    if (c.is_rational() || is_zero(c.rat_part())) {
      append_scalar_term(out, first, c, mono);
    } else {
      // split mixed a + b*sqrt(d) coefficients into two grammar-conformant terms
      append_scalar_term(out, first, QuadExt(c.rat_part()), mono);
      append_scalar_term(out, first, QuadExt(Rational(0), c.surd_part(), c.radicand()), mono);
    }
  }
  return out;
}

std::string form_str(const Form<double>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    double a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", a);
    out += std::string(buf) + "*" + mask_str(m);
  }
  return out;
}

std::string form_str(const Form<Polynomial>& f,
                     const std::function<std::string(uint32_t)>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, p] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + p.str(names) + ")*" + mask_str(m);
  }
  return out;
}

} // namespace halfflat
