#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xsect/field.hpp"

namespace xsect {

/// Dense univariate polynomial; coefficient i multiplies x^i.
template <Field K>
class UniPoly {
 public:
  using Elem = typename K::Element;

  explicit UniPoly(K field) : field_(std::move(field)) {}
  UniPoly(K field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const K& field, const Elem& c) { return UniPoly(field, {c}); }
  static UniPoly x(const K& field) { return UniPoly(field, {field.zero(), field.one()}); }

  /// prod_l (x - roots[l])
  static UniPoly from_roots(const K& field, std::span<const Elem> roots) {
    UniPoly p = constant(field, field.one());
    for (const Elem& r : roots) p = p * UniPoly(field, {-r, field.one()});
    return p;
  }

  const K& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  Elem leading_coefficient() const { return is_zero() ? field_.zero() : coeffs_.back(); }

  Elem evaluate(const Elem& at) const {
    Elem acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  UniPoly scaled(const Elem& c) const {
    std::vector<Elem> out;
    out.reserve(coeffs_.size());
    for (const Elem& a : coeffs_) out.push_back(a * c);
    return UniPoly(field_, std::move(out));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UniPoly(a.field_, std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a) { return a.scaled(-a.field_.one()); }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.field_, std::move(out));
  }

  /// Euclidean division: returns (q, r) with a = q*b + r, deg r < deg b.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const K& f = a.field_;
    std::vector<Elem> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(f), a};
    std::vector<Elem> quo(a.degree() - db + 1, f.zero());
    const Elem inv_lead = b.leading_coefficient().inverse();
    for (int k = a.degree(); k >= db; --k) {
      if (rem[k].is_zero()) continue;
      Elem c = rem[k] * inv_lead;
      quo[k - db] = c;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs_[j];
    }
    return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
  }

  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Monic lcm; zero if either argument is zero.
  friend UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    return (a * b / gcd(a, b)).monic();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  K field_;
  std::vector<Elem> coeffs_;
};

}  // namespace xsect
