#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "halfflat/errors.hpp"
#include "halfflat/matrix.hpp"
#include "halfflat/polynomial.hpp"
#include "halfflat/quadext.hpp"

namespace halfflat {

// A strictly increasing index tuple out of 1..n (n <= 9), encoded as a bit
// mask: bit i-1 set  <=>  index i present.
using IndexMask = uint16_t;

inline int mask_degree(IndexMask m) { return std::popcount(static_cast<unsigned>(m)); }

std::vector<int> mask_indices(IndexMask m);
IndexMask mask_from_indices(const std::vector<int>& indices, int dim);
std::string mask_str(IndexMask m); // "e134" style

// Koszul sign of sorting the concatenation of two disjoint sorted tuples;
// 0 when the tuples intersect.
int merge_sign(IndexMask a, IndexMask b);

// Lexicographic order on the increasing tuples (not the numeric mask order).
bool tuple_lex_less(IndexMask a, IndexMask b);

struct TupleLexLess {
  bool operator()(IndexMask a, IndexMask b) const { return tuple_lex_less(a, b); }
};

// All degree-k tuples in 1..n, lexicographically.
std::vector<IndexMask> tuples_lex(int n, int k);

namespace detail {

template <class R>
R ring_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<R, double>)
    return q.get_d();
  else if constexpr (std::is_same_v<R, Polynomial>)
    return Polynomial::constant(q);
  else
    return R{q};
}

template <class R>
bool ring_is_zero(const R& x) {
  if constexpr (std::is_floating_point_v<R>)
    return x == R(0);
  else
    return is_zero(x);
}

} // namespace detail

// Alternating k-form on an n-dimensional space with coefficients in a
// commutative ring R (exact scalars, polynomials or doubles).  Zero
// coefficients are never stored; iteration order is tuple-lexicographic.
template <class R>
class Form {
public:
  using CoeffMap = std::map<IndexMask, R, TupleLexLess>;

  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > 9) fail(errc::index_out_of_range, "dimension must be within 0..9");
    if (degree < 0 || degree > dim) fail(errc::degree_overflow, "degree outside 0..dim");
  }

  static Form basis_element(int dim, const std::vector<int>& indices, R coeff = R{1}) {
    Form f(dim, static_cast<int>(indices.size()));
    f.add_term(mask_from_indices(indices, dim), std::move(coeff));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& terms() const { return coeffs_; }
  size_t term_count() const { return coeffs_.size(); }

  R coeff(IndexMask m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? R{} : it->second;
  }

  void add_term(IndexMask m, const R& c) {
    if (detail::ring_is_zero(c)) return;
    if (mask_degree(m) != degree_) fail(errc::degree_overflow, "term degree mismatch");
    if (m >= (IndexMask(1) << dim_)) fail(errc::index_out_of_range, "index exceeds dimension");
    auto [it, inserted] = coeffs_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::ring_is_zero(it->second)) coeffs_.erase(it);
    }
  }

  Form operator-() const {
    Form out(dim_, degree_);
    for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
    return out;
  }

  friend Form operator+(const Form& x, const Form& y) {
    x.check_same_shape(y);
    Form out = x;
    for (const auto& [m, c] : y.coeffs_) out.add_term(m, c);
    return out;
  }

  friend Form operator-(const Form& x, const Form& y) {
    x.check_same_shape(y);
    Form out = x;
    for (const auto& [m, c] : y.coeffs_) out.add_term(m, -c);
    return out;
  }

  Form scaled(const R& s) const {
    Form out(dim_, degree_);
    for (const auto& [m, c] : coeffs_) out.add_term(m, c * s);
    return out;
  }

  friend bool operator==(const Form& x, const Form& y) {
    return x.dim_ == y.dim_ && x.degree_ == y.degree_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Form& x, const Form& y) { return !(x == y); }

  // Same form on a larger space (new basis directions never occur).
  Form embedded(int new_dim) const {
    if (new_dim < dim_) fail(errc::dimension_mismatch, "embedding must not shrink the space");
    Form out(new_dim, degree_);
    out.coeffs_ = coeffs_;
    return out;
  }

private:
  void check_same_shape(const Form& other) const {
    if (dim_ != other.dim_) fail(errc::dimension_mismatch, "forms live on different spaces");
    if (degree_ != other.degree_) fail(errc::degree_overflow, "forms have different degrees");
  }

  int dim_ = 0;
  int degree_ = 0;
  CoeffMap coeffs_;
};

// Graded-anticommutative product with Koszul signs.
template <class R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
  if (a.dim() != b.dim()) fail(errc::dimension_mismatch, "wedge of forms on different spaces");
  if (a.degree() + b.degree() > a.dim())
    fail(errc::degree_overflow, "wedge degree exceeds the dimension");
  Form<R> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      R c = ca * cb;
      out.add_term(static_cast<IndexMask>(ma | mb), s > 0 ? c : -c);
    }
  return out;
}

// Interior product v -| a with a vector given by its components.
template <class R>
Form<R> interior(const std::vector<R>& v, const Form<R>& a) {
  if (static_cast<int>(v.size()) != a.dim())
    fail(errc::dimension_mismatch, "vector length does not match the form's space");
  if (a.degree() < 1) fail(errc::degree_underflow, "interior product of a 0-form");
  Form<R> out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (int idx : mask_indices(m)) {
      const R& comp = v[idx - 1];
      if (!detail::ring_is_zero(comp)) {
        R contrib = comp * c;
        out.add_term(static_cast<IndexMask>(m & ~(IndexMask(1) << (idx - 1))),
                     (pos % 2 == 0) ? contrib : -contrib);
      }
      ++pos;
    }
  }
  return out;
}

template <class R>
R ring_divide(const R& x, const R& y) {
  if constexpr (std::is_same_v<R, Polynomial>) {
    if (y.is_zero()) fail(errc::division_by_zero, "division by zero polynomial");
    if (y.term_count() != 1 || !y.terms().begin()->first.is_one())
      fail(errc::zero_volume, "volume coefficient must be a nonzero constant");
    return x.scaled(Rational(1) / y.terms().begin()->second);
  } else {
    return x / y;
  }
}

// The isomorphism of (n-1)-forms with vectors weighted by the volume nu0:
// returns c with xi = sum_i c_i (e_i -| nu0).  nu0 must be a nonzero multiple
// of e^{1..n} with an invertible coefficient.
template <class R>
std::vector<R> kappa(const Form<R>& xi, const Form<R>& nu0) {
  int n = xi.dim();
  if (xi.degree() != n - 1) fail(errc::degree_overflow, "kappa expects a form of degree dim-1");
  if (nu0.dim() != n || nu0.degree() != n) fail(errc::dimension_mismatch, "volume form shape");
  if (nu0.is_zero()) fail(errc::zero_volume, "volume form is zero");
  IndexMask full = static_cast<IndexMask>((IndexMask(1) << n) - 1);
  const R& vol = nu0.terms().begin()->second;
  std::vector<R> c(n, R{});
  for (const auto& [m, coeff] : xi.terms()) {
    IndexMask missing = static_cast<IndexMask>(full & ~m);
    int i = std::countr_zero(static_cast<unsigned>(missing)) + 1;
    // e_i -| nu0 = vol * (-1)^{i-1} e^{1..n \ i}
    R value = ring_divide(coeff, vol);
    c[i - 1] = (i % 2 == 1) ? value : -value;
  }
  return c;
}

// Pullback through a linear map in all slots: (A*a)(x_1..x_k) = a(Ax_1..Ax_k).
template <class R>
Form<R> pullback(const Matrix<R>& a_matrix, const Form<R>& a) {
  int n = a.dim();
  if (a_matrix.rows() != static_cast<size_t>(n) || a_matrix.cols() != static_cast<size_t>(n))
    fail(errc::dimension_mismatch, "pullback matrix must be dim x dim");
  // A* e^j as 1-forms, row by row.
  std::vector<Form<R>> pulled(n, Form<R>(n, 1));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) pulled[j].add_term(IndexMask(1) << i, a_matrix(j, i));
  Form<R> out(n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    Form<R> prod(n, 0);
    prod.add_term(0, c);
    for (int idx : mask_indices(m)) prod = wedge(prod, pulled[idx - 1]);
    for (const auto& [mm, cc] : prod.terms()) out.add_term(mm, cc);
  }
  return out;
}

// Exact evaluation of a k-form on k vectors (minor-determinant expansion).
template <class R>
R eval_on_vectors(const Form<R>& a, const std::vector<std::vector<R>>& vectors) {
  int k = a.degree();
  if (static_cast<int>(vectors.size()) != k)
    fail(errc::dimension_mismatch, "need exactly degree-many vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != a.dim())
      fail(errc::dimension_mismatch, "vector length does not match the form's space");
  R acc{};
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = mask_indices(m);
    Matrix<R> minor(k, k);
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) minor(r, col) = vectors[col][idx[r] - 1];
    acc = acc + c * cofactor_det(minor);
  }
  return acc;
}

// Division-free determinant for small matrices over any commutative ring.
template <class R>
R cofactor_det(const Matrix<R>& m) {
  size_t n = m.rows();
  if (n == 0) return R{1};
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R acc{};
  for (size_t i = 0; i < n; ++i) {
    if (detail::ring_is_zero(m(i, 0))) continue;
    Matrix<R> sub(n - 1, n - 1);
    size_t rr = 0;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      for (size_t c = 1; c < n; ++c) sub(rr, c - 1) = m(r, c);
      ++rr;
    }
    R term = m(i, 0) * cofactor_det(sub);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// ---- conversions between coefficient rings ----

Form<double> to_double_form(const Form<QuadExt>& f);
std::vector<double> to_double_vector(const std::vector<QuadExt>& v);

// Requires every coefficient to be rational (surd part zero).
Form<Polynomial> to_polynomial_form(const Form<QuadExt>& f);
Rational require_rational(const QuadExt& x);

// Evaluates polynomial coefficients at an exact point.
Form<QuadExt> eval_form(const Form<Polynomial>& f, const std::map<uint32_t, QuadExt>& point);

// ---- text grammar for scalar-coefficient forms ----

// Sum of terms, term = [sign][coefficient '*'] e<digits> with '^' joins also
// accepted, e.g. "-e126 - e135 + e234 + e456", "sqrt(3)/2*e123", "e2^e3".
struct FieldSpec {
  bool allow_surd = true;   // false under --field q
  unsigned radicand = 0;    // fixed radicand when nonzero (--field qsqrt:<d>)
};

Form<QuadExt> parse_form(std::string_view text, int dim, int expected_degree = -1,
                         const FieldSpec& field = {},
                         const std::map<std::string, QuadExt>& params = {});
std::string form_str(const Form<QuadExt>& f);
std::string form_str(const Form<double>& f);
std::string form_str(const Form<Polynomial>& f, const std::function<std::string(uint32_t)>& names);

// A 1-form expression read as a vector (components of the metric-free dual).
std::vector<QuadExt> parse_vector(std::string_view text, int dim,
                                  const FieldSpec& field = {},
                                  const std::map<std::string, QuadExt>& params = {});

// Scalar literal: products/quotients of rationals and sqrt(D), e.g.
// "-19/4", "sqrt(3)/2", "1/2*sqrt(3)".
QuadExt parse_scalar(std::string_view text, const FieldSpec& field = {},
                     const std::map<std::string, QuadExt>& params = {});

} // namespace halfflat
