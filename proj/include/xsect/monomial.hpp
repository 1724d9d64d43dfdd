#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "xsect/error.hpp"

namespace xsect {

/// Exponent vector over positional variables x1..xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

  /// Total degree of x2..xn.
  unsigned degree_y() const {
    return exps_.empty() ? 0u : std::accumulate(exps_.begin() + 1, exps_.end(), 0u);
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  /// Exact quotient; caller guarantees `b` divides `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
    return r;
  }

  bool coprime_with(const Monomial& b) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  /// Drops x1, reindexing x2..xn to x1..x(n-1).
  Monomial without_first() const { return Monomial(std::vector<unsigned>(exps_.begin() + 1, exps_.end())); }

  /// Prepends `k` zero exponents (new leading variables).
  Monomial shifted(std::size_t k) const {
    std::vector<unsigned> e(k, 0);
    e.insert(e.end(), exps_.begin(), exps_.end());
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic comparison with x1 > x2 > ... > xn.
inline std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// Graded lex on x2 > ... > xn only; x1 is treated as part of the coefficient.
inline std::strong_ordering grlex_y_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_y() <=> b.degree_y(); c != 0) return c;
  for (std::size_t i = 1; i < a.nvars(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct MonomialOrder {
  enum class Kind {
    GrlexAll,  // x1 > x2 > ... > xn
    GrlexY,    // x2 > ... > xn, x1 ignored (not a total order on full monomials)
    Block,     // first `block` variables eliminated: grlex on the block, ties by grlex on the rest
  };

  Kind kind = Kind::GrlexAll;
  std::size_t block = 0;

  static MonomialOrder grlex() { return {}; }
  static MonomialOrder grlex_y() { return {Kind::GrlexY, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Block, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::GrlexAll: return grlex_compare(a, b);
      case Kind::GrlexY: return grlex_y_compare(a, b);
      case Kind::Block: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block; ++i) {
          da += a[i];
          db += b[i];
        }
        if (auto c = da <=> db; c != 0) return c;
        for (std::size_t i = 0; i < block; ++i) {
          if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        if (auto c = a.degree() - da <=> b.degree() - db; c != 0) return c;
        for (std::size_t i = block; i < a.nvars(); ++i) {
          if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Strict-weak "comes first" predicate for containers sorted by descending grlex.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// C(n + d, n) with a saturating result so callers can compare against caps.
inline std::uint64_t count_monomials(std::size_t nvars, std::uint64_t max_degree) {
  // product_{i=1..n} (d + i) / i, exact at every step
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= nvars; ++i) {
    acc = acc * (max_degree + i) / i;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace detail {

inline void enumerate_degree(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
                             std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate_degree(pos + 1, remaining - e, cur, out);
  }
}

}  // namespace detail

/// All monomials in `nvars` variables of total degree <= max_degree, in
/// descending grlex order.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  for (unsigned d = max_degree + 1; d-- > 0;) detail::enumerate_degree(0, d, cur, out);
  return out;
}

}  // namespace xsect
