#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xsect/field.hpp"
#include "xsect/linalg.hpp"
#include "xsect/monomial.hpp"
#include "xsect/unipoly.hpp"

namespace xsect {

/// Sparse multivariate polynomial in positional variables x1..xn. Terms are
/// kept in descending grlex order and never store a zero coefficient.
template <Field K>
class MultiPoly {
 public:
  using Elem = typename K::Element;
  using TermMap = std::map<Monomial, Elem, GrlexDescending>;

  MultiPoly(K field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MultiPoly constant(const K& field, std::size_t nvars, const Elem& c) {
    MultiPoly p(field, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static MultiPoly term(const K& field, const Monomial& m, const Elem& c) {
    MultiPoly p(field, m.nvars());
    p.add_term(m, c);
    return p;
  }

  /// The variable x_{index+1}.
  static MultiPoly variable(const K& field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) fail(ErrorKind::UnknownVariable, "variable index out of range");
    Monomial m(nvars);
    m[index] = 1;
    return term(field, m, field.one());
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Elem& leading_coefficient() const { return terms_.begin()->second; }

  Elem coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Monomial& m, const Elem& c) {
    if (m.nvars() != nvars_) fail(ErrorKind::InvalidArgument, "monomial arity does not match the ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Scaled so the grlex-leading coefficient is 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading_coefficient().inverse();
  }

  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != nvars_) fail(ErrorKind::InvalidArgument, "evaluation point has wrong arity");
    Elem acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Elem t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] != 0) t *= power(point[i], m[i], field_.one());
      }
      acc += t;
    }
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return a * (-a.field_.one()); }

  friend MultiPoly operator*(const MultiPoly& a, const Elem& s) {
    MultiPoly r(a.field_, a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
    return r;
  }
  friend MultiPoly operator*(const Elem& s, const MultiPoly& a) { return a * s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }

  /// Multiplies by a single term.
  MultiPoly times_term(const Monomial& m, const Elem& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(field_, nvars_, field_.one());
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) fail(ErrorKind::InvalidArgument, "polynomials live in rings of different arity");
    if (!(o.field_ == field_)) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  }

  K field_;
  std::size_t nvars_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Substitutions and views that single out x1.

/// f(alpha, x2, ..., xn), still in n variables with x1 absent.
template <Field K>
MultiPoly<K> substitute_x1(const MultiPoly<K>& f, const typename K::Element& alpha) {
  MultiPoly<K> r(f.field(), f.nvars());
  if (f.nvars() == 0) fail(ErrorKind::InvalidArgument, "substitute_x1 needs at least one variable");
  for (const auto& [m, c] : f.terms()) {
    Monomial y = m;
    y[0] = 0;
    r.add_term(y, c * power(alpha, m[0], f.field().one()));
  }
  return r;
}

/// Removes x1 (which must not occur) and renames x2..xn to x1..x(n-1).
template <Field K>
MultiPoly<K> drop_first_variable(const MultiPoly<K>& f) {
  MultiPoly<K> r(f.field(), f.nvars() - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m[0] != 0) fail(ErrorKind::InvalidArgument, "x1 still occurs");
    r.add_term(m.without_first(), c);
  }
  return r;
}

/// Adds `k` new leading variables; old x_i becomes x_{i+k}.
template <Field K>
MultiPoly<K> shift_variables(const MultiPoly<K>& f, std::size_t k) {
  MultiPoly<K> r(f.field(), f.nvars() + k);
  for (const auto& [m, c] : f.terms()) r.add_term(m.shifted(k), c);
  return r;
}

/// f restricted to the hyperplane x1 = alpha, in the (n-1)-variable ring.
template <Field K>
MultiPoly<K> restrict_x1(const MultiPoly<K>& f, const typename K::Element& alpha) {
  return drop_first_variable(substitute_x1(f, alpha));
}

/// Largest y-monomial (x2..xn, graded lex) carrying a nonzero coefficient
/// a_i(x1). Returned as an n-variable monomial with x1-exponent 0.
template <Field K>
std::optional<Monomial> multideg_y(const MultiPoly<K>& f) {
  std::optional<Monomial> best;
  for (const auto& [m, c] : f.terms()) {
    Monomial y = m;
    y[0] = 0;
    if (!best || grlex_y_compare(y, *best) > 0) best = y;
  }
  return best;
}

/// Writes f = sum_i a_i(x1) y^i and returns the map y^i -> a_i.
template <Field K>
std::map<Monomial, UniPoly<K>, GrlexDescending> coefficients_in_x1(const MultiPoly<K>& f) {
  std::map<Monomial, std::vector<typename K::Element>, GrlexDescending> dense;
  for (const auto& [m, c] : f.terms()) {
    auto& v = dense[m.without_first()];
    if (v.size() <= m[0]) v.resize(m[0] + 1, f.field().zero());
    v[m[0]] = c;
  }
  std::map<Monomial, UniPoly<K>, GrlexDescending> out;
  for (auto& [y, v] : dense) out.emplace(y, UniPoly<K>(f.field(), std::move(v)));
  return out;
}

/// Monic gcd in K[x1] of the coefficients a_i(x1) of f.
template <Field K>
UniPoly<K> content_x1(const MultiPoly<K>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  UniPoly<K> g(f.field());
  for (const auto& [y, a] : coefficients_in_x1(f)) {
    g = gcd(g, a);
    if (g.degree() == 0) break;
  }
  return g;
}

/// Rebuilds sum_i a_i(x1) y^i from y-monomials (length n-1) and univariate
/// coefficients.
template <Field K>
MultiPoly<K> from_x1_coefficients(const K& field, std::size_t nvars,
                                  const std::map<Monomial, UniPoly<K>, GrlexDescending>& parts) {
  MultiPoly<K> f(field, nvars);
  for (const auto& [y, a] : parts) {
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
      Monomial m = y.shifted(1);
      m[0] = static_cast<unsigned>(k);
      f.add_term(m, a.coeffs()[k]);
    }
  }
  return f;
}

/// Substitutes x_i -> images[i] simultaneously.
template <Field K>
MultiPoly<K> compose(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& images) {
  if (images.size() != f.nvars()) fail(ErrorKind::InvalidArgument, "compose needs one image per variable");
  const std::size_t target_n = images.empty() ? 0 : images.front().nvars();
  MultiPoly<K> r(f.field(), target_n);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly<K> t = MultiPoly<K>::constant(f.field(), target_n, c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) t = t * images[i].pow(m[i]);
    }
    r += t;
  }
  return r;
}

/// f(M x): each x_i is replaced by sum_j M(i, j) x_j. M must be invertible.
template <Field K>
MultiPoly<K> apply_linear_change(const MultiPoly<K>& f, const Matrix<K>& M) {
  const std::size_t n = f.nvars();
  if (M.rows() != n || M.cols() != n) fail(ErrorKind::InvalidArgument, "change of coordinates must be n x n");
  if (rank(M) != n) fail(ErrorKind::SingularMatrix, "change of coordinates is not invertible");
  std::vector<MultiPoly<K>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly<K> img(f.field(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m(n);
      m[j] = 1;
      img.add_term(m, M(i, j));
    }
    images.push_back(std::move(img));
  }
  return compose(f, images);
}

}  // namespace xsect
