#pragma once

// Dense exact linear algebra. Over QQ the forward sweep is fraction-free
// (Bareiss) on an integer-scaled copy; over F_p it is plain Gauss-Jordan on
// raw residues. Pivot choice is always the first nonzero entry in the column.

#include <algorithm>
#include <span>
#include <type_traits>
#include <vector>

#include "xsect/field.hpp"
#include "xsect/parallel.hpp"
#include "xsect/unipoly.hpp"

namespace xsect {

template <Field K>
class Matrix {
 public:
  using Elem = typename K::Element;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_rows(const K& field, const std::vector<std::vector<Elem>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <Field K>
struct Echelon {
  Matrix<K> rref;
  std::vector<std::size_t> pivots;  // pivots[r] = pivot column of row r
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

/// Textbook Gauss-Jordan with field division. Kept generic so it doubles as
/// the reference for the specialised paths.
template <Field K>
Echelon<K> gauss_jordan(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    auto inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Gauss-Jordan on raw residues, skipping zero multipliers (Macaulay-type
/// matrices are sparse for most of the sweep).
inline Echelon<PrimeField> gauss_jordan_fp(Matrix<PrimeField> m) {
  const std::uint64_t p = m.field().modulus();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::uint64_t> a(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) a[i * nc + j] = m(i, j).value();
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r) std::swap_ranges(a.begin() + piv * nc, a.begin() + (piv + 1) * nc, a.begin() + r * nc);
    std::uint64_t* prow = a.data() + r * nc;
    const std::uint64_t inv = Residue(prow[c], p).inverse().value();
    for (std::size_t j = c; j < nc; ++j) {
      if (prow[j] != 0) prow[j] = mulmod(prow[j], inv, p);
    }
    // nonzero support of the pivot row beyond c
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < nc; ++j) {
      if (prow[j] != 0) support.push_back(j);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r) continue;
      std::uint64_t* row = a.data() + i * nc;
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j : support) {
        std::uint64_t t = mulmod(neg, prow[j], p) + row[j];
        row[j] = t >= p ? t - p : t;
      }
      row[c] = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Residue(a[i * nc + j], p);
  }
  return {std::move(m), std::move(pivots)};
}

/// Fraction-free forward elimination (Bareiss) on an integer copy of `m`,
/// then rational back-substitution to reduced form.
inline Echelon<RationalField> bareiss_rref(const Matrix<RationalField>& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<mpz_class> a(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const mpq_class& q = m(i, j).value();
      a[i * nc + j] = q.get_num() * (den / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r) std::swap_ranges(a.begin() + piv * nc, a.begin() + (piv + 1) * nc, a.begin() + r * nc);
    const mpz_class& pv = a[r * nc + c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      mpz_class f = a[i * nc + c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        mpz_class& x = a[i * nc + j];
        x = pv * x - f * a[r * nc + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * nc + c] = 0;
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  // Back-substitution: normalise each pivot row, clear above it.
  Matrix<RationalField> out(m.field(), nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = Rational(a[i * nc + j], mpz_class(1));
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Rational inv = out(k, c).inverse();
    for (std::size_t j = c; j < nc; ++j) {
      if (!out(k, j).is_zero()) out(k, j) *= inv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (out(i, c).is_zero()) continue;
      Rational f = out(i, c);
      for (std::size_t j = c; j < nc; ++j) {
        if (!out(k, j).is_zero()) out(i, j) -= f * out(k, j);
      }
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace detail

/// Reduced row echelon form, using the specialised sweep for each field.
template <Field K>
Echelon<K> row_reduce(const Matrix<K>& m) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return detail::gauss_jordan_fp(m);
  } else if constexpr (std::is_same_v<K, RationalField>) {
    return detail::bareiss_rref(m);
  } else {
    return detail::gauss_jordan(m);
  }
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return row_reduce(m).rank();
}

/// Plain Gaussian elimination with field division, for cross-checking.
template <Field K>
std::size_t rank_gauss(const Matrix<K>& m) {
  return detail::gauss_jordan(m).rank();
}

template <Field K>
struct LinSystem {
  Matrix<K> A;
  std::vector<typename K::Element> b;
};

template <Field K>
struct Solution {
  using Elem = typename K::Element;

  bool consistent = false;
  std::vector<Elem> witness;                 // A * witness = b
  std::vector<std::vector<Elem>> nullspace;  // basis of ker(A)
};

template <Field K>
Solution<K> solve(const LinSystem<K>& sys) {
  const Matrix<K>& A = sys.A;
  if (sys.b.size() != A.rows()) fail(ErrorKind::InvalidArgument, "rhs length does not match rows");
  const K& field = A.field();
  if constexpr (std::is_same_v<K, PrimeField>) {
    auto foreign = [&](const Residue& v) { return v.modulus() != field.modulus(); };
    bool bad = std::any_of(sys.b.begin(), sys.b.end(), foreign);
    for (std::size_t i = 0; i < A.rows() && !bad; ++i) bad = std::any_of(A.row(i).begin(), A.row(i).end(), foreign);
    if (bad) fail(ErrorKind::FieldMismatch, "system entries from a different prime field");
  }
  Matrix<K> aug(field, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = sys.b[i];
  }
  Echelon<K> ech = row_reduce(aug);
  Solution<K> sol;
  const std::size_t m = A.cols();
  if (!ech.pivots.empty() && ech.pivots.back() == m) return sol;
  sol.consistent = true;
  sol.witness.assign(m, field.zero());
  std::vector<bool> is_pivot(m, false);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    is_pivot[ech.pivots[r]] = true;
    sol.witness[ech.pivots[r]] = ech.rref(r, m);
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename K::Element> v(m, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rref(r, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

/// Basis of the right kernel of A.
template <Field K>
std::vector<std::vector<typename K::Element>> nullspace(const Matrix<K>& A) {
  return solve(LinSystem<K>{A, std::vector<typename K::Element>(A.rows(), A.field().zero())}).nullspace;
}

// ---------------------------------------------------------------------------
// Systems whose entries are polynomials in a parameter t.

template <Field K>
struct ParamLinSystem {
  std::vector<std::vector<UniPoly<K>>> A;  // N x M
  std::vector<UniPoly<K>> b;               // N

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A.front().size(); }

  /// Largest entry degree (0 when every entry is constant or zero).
  std::size_t degree() const {
    int d = 0;
    for (const auto& row : A)
      for (const auto& e : row) d = std::max(d, e.degree());
    for (const auto& e : b) d = std::max(d, e.degree());
    return static_cast<std::size_t>(d);
  }

  LinSystem<K> at(const K& field, const typename K::Element& t) const {
    LinSystem<K> s{Matrix<K>(field, rows(), cols()), {}};
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) s.A(i, j) = A[i][j].evaluate(t);
      s.b.push_back(b[i].evaluate(t));
    }
    return s;
  }
};

enum class ParamVerdict { CompatibleOverKt, IncompatibleOverKt };

/// Least sample count d * max{N, M + 1} + 1 for which the sampled test is licensed.
template <Field K>
std::uint64_t parametric_sample_requirement(const ParamLinSystem<K>& sys) {
  return sys.degree() * std::max(sys.rows(), sys.cols() + 1) + 1;
}

namespace detail {

template <Field K>
void check_samples(const ParamLinSystem<K>& sys, std::span<const typename K::Element> samples) {
  std::vector<typename K::Element> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::DuplicateSamples, "parametric samples must be pairwise distinct");
  }
  const auto need = parametric_sample_requirement(sys);
  if (samples.size() < need) {
    fail(ErrorKind::NotEnoughSamples, "need at least " + std::to_string(need) + " samples, got " +
                                          std::to_string(samples.size()));
  }
}

template <Field K>
bool compatible_at(const LinSystem<K>& s) {
  Matrix<K> aug(s.A.field(), s.A.rows(), s.A.cols() + 1);
  for (std::size_t i = 0; i < s.A.rows(); ++i) {
    for (std::size_t j = 0; j < s.A.cols(); ++j) aug(i, j) = s.A(i, j);
    aug(i, s.A.cols()) = s.b[i];
  }
  return rank(aug) == rank(s.A);
}

}  // namespace detail

/// Sampled compatibility: CompatibleOverKt iff the specialised system is
/// consistent at every sample.
template <Field K>
ParamVerdict parametric_compatible(const K& field, const ParamLinSystem<K>& sys,
                                   std::span<const typename K::Element> samples, unsigned jobs = 1) {
  detail::check_samples(sys, samples);
  std::vector<char> ok(samples.size(), 0);
  parallel_for(samples.size(), jobs, [&](std::size_t i) { ok[i] = detail::compatible_at(sys.at(field, samples[i])); });
  bool all = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return all ? ParamVerdict::CompatibleOverKt : ParamVerdict::IncompatibleOverKt;
}

/// Generic-rank variant: compares max_S rank(A(a)|b(a)) with max_S rank(A(a)).
/// Each maximum equals the rank over K(t) once |S| exceeds the degree of the
/// relevant minors, so special points where A(a) drops rank cannot flip the
/// verdict.
template <Field K>
ParamVerdict parametric_compatible_generic_rank(const K& field, const ParamLinSystem<K>& sys,
                                                std::span<const typename K::Element> samples) {
  detail::check_samples(sys, samples);
  std::size_t rank_a = 0, rank_ab = 0;
  for (const auto& t : samples) {
    LinSystem<K> s = sys.at(field, t);
    Matrix<K> aug(field, s.A.rows(), s.A.cols() + 1);
    for (std::size_t i = 0; i < s.A.rows(); ++i) {
      for (std::size_t j = 0; j < s.A.cols(); ++j) aug(i, j) = s.A(i, j);
      aug(i, s.A.cols()) = s.b[i];
    }
    rank_a = std::max(rank_a, rank(s.A));
    rank_ab = std::max(rank_ab, rank(aug));
  }
  return rank_a == rank_ab ? ParamVerdict::CompatibleOverKt : ParamVerdict::IncompatibleOverKt;
}

}  // namespace xsect
