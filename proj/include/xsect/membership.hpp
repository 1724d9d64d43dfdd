#pragma once

// Ideal membership by degree-bounded linear systems. A candidate identity
// f = sum g_i f_i with deg g_i <= D is linear in the coefficients of the g_i;
// at D = Hermann's bound the system decides membership outright. The sliced
// tests reduce a question in n variables to many questions in n - 1.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xsect/bounds.hpp"
#include "xsect/groebner.hpp"
#include "xsect/linalg.hpp"
#include "xsect/parallel.hpp"
#include "xsect/slicing.hpp"

namespace xsect {

enum class Verdict { In, NotIn, NotFoundWithinBound, SampleTooSmall };
enum class RadicalVerdict { InRadical, NotInRadical, SampleTooSmall };
enum class RadicalEngine { Groebner, KollarBounded };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::NotIn: return "NotIn";
    case Verdict::NotFoundWithinBound: return "NotFoundWithinBound";
    case Verdict::SampleTooSmall: return "SampleTooSmall";
  }
  return "?";
}

inline std::string to_string(RadicalVerdict v) {
  switch (v) {
    case RadicalVerdict::InRadical: return "InRadical";
    case RadicalVerdict::NotInRadical: return "NotInRadical";
    case RadicalVerdict::SampleTooSmall: return "SampleTooSmall";
  }
  return "?";
}

/// f = sum cofactors[i] * gens[i], every cofactor of degree <= degree_bound_used.
template <Field K>
struct MembershipCertificate {
  std::vector<MultiPoly<K>> cofactors;
  std::uint64_t degree_bound_used = 0;

  bool verifies(const MultiPoly<K>& f, const Ideal<K>& I) const {
    if (cofactors.size() != I.gens().size()) return false;
    MultiPoly<K> sum(I.field(), I.nvars());
    for (std::size_t i = 0; i < cofactors.size(); ++i) {
      if (cofactors[i].degree() > static_cast<int>(degree_bound_used)) return false;
      sum += cofactors[i] * I.gens()[i];
    }
    return sum == f;
  }
};

template <Field K>
struct MembershipResult {
  Verdict verdict;
  std::optional<MembershipCertificate<K>> certificate;  // present iff In
};

namespace detail {

template <Field K>
MembershipResult<K> member_by_zero(const Ideal<K>& I) {
  MembershipCertificate<K> cert;
  for (std::size_t i = 0; i < I.gens().size(); ++i) cert.cofactors.emplace_back(I.field(), I.nvars());
  return {Verdict::In, std::move(cert)};
}

inline void check_entries(std::uint64_t rows, std::uint64_t cols, const Limits& limits, const std::string& bound) {
  unsigned __int128 entries = static_cast<unsigned __int128>(rows) * cols;
  if (entries > limits.max_matrix_entries) {
    throw FeasibilityError(bound, "linear system of " + std::to_string(rows) + " x " + std::to_string(cols) +
                                      " exceeds the cap of " + std::to_string(limits.max_matrix_entries) +
                                      " entries (degree bound " + bound + ")");
  }
}

}  // namespace detail

/// Looks for cofactors of degree <= D. NotFoundWithinBound is inconclusive
/// unless D reaches the Hermann bound.
template <Field K>
MembershipResult<K> bounded_membership(const MultiPoly<K>& f, const Ideal<K>& I, std::uint64_t D,
                                       const Limits& limits = {}) {
  if (f.nvars() != I.nvars()) fail(ErrorKind::InvalidArgument, "polynomial and ideal live in different rings");
  if (f.is_zero()) return detail::member_by_zero(I);
  if (I.is_zero()) return {Verdict::NotFoundWithinBound, std::nullopt};

  const K& field = I.field();
  const std::size_t n = I.nvars();
  const std::size_t r = I.gens().size();
  const unsigned delta = I.max_degree();
  const std::uint64_t per_gen = count_monomials(n, D);
  const std::uint64_t nrows = count_monomials(n, D + delta);
  if (per_gen == UINT64_MAX || nrows == UINT64_MAX) {
    throw FeasibilityError(std::to_string(D), "degree bound " + std::to_string(D) + " is far beyond the cap");
  }
  detail::check_entries(nrows, per_gen * r, limits, std::to_string(D));

  const auto shifts = monomials_up_to(n, static_cast<unsigned>(D));
  std::map<Monomial, std::size_t, GrlexDescending> row_of;
  for (const auto& m : monomials_up_to(n, static_cast<unsigned>(D + delta))) row_of.emplace(m, row_of.size());
  for (const auto& [m, c] : f.terms()) row_of.emplace(m, row_of.size());  // only if deg f > D + delta

  LinSystem<K> sys{Matrix<K>(field, row_of.size(), r * shifts.size()),
                   std::vector<typename K::Element>(row_of.size(), field.zero())};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      const std::size_t col = i * shifts.size() + s;
      for (const auto& [m, c] : I.gens()[i].terms()) sys.A(row_of.at(m * shifts[s]), col) = c;
    }
  }
  for (const auto& [m, c] : f.terms()) sys.b[row_of.at(m)] = c;

  Solution<K> sol = solve(sys);
  if (!sol.consistent) return {Verdict::NotFoundWithinBound, std::nullopt};

  MembershipCertificate<K> cert;
  cert.degree_bound_used = D;
  for (std::size_t i = 0; i < r; ++i) {
    MultiPoly<K> g(field, n);
    for (std::size_t s = 0; s < shifts.size(); ++s) g.add_term(shifts[s], sol.witness[i * shifts.size() + s]);
    cert.cofactors.push_back(std::move(g));
  }
  if (!cert.verifies(f, I)) fail(ErrorKind::Internal, "solver returned a certificate that does not verify");
  return {Verdict::In, std::move(cert)};
}

/// The Hermann bound d + 2 (r delta)^(2^(n-1)) for this instance.
template <Field K>
BoundReport membership_degree_bound(const MultiPoly<K>& f, const Ideal<K>& I) {
  return hermann_bound(static_cast<std::uint64_t>(std::max(f.degree(), 0)), I.max_degree(),
                       std::max<std::size_t>(I.count(), 1), I.nvars());
}

/// Complete decision: In carries a certificate, NotIn is definitive because the
/// search reached the Hermann bound.
template <Field K>
MembershipResult<K> ideal_membership(const MultiPoly<K>& f, const Ideal<K>& I, const Limits& limits = {}) {
  if (f.is_zero()) return detail::member_by_zero(I);
  if (I.is_zero()) return {Verdict::NotIn, std::nullopt};
  if (I.nvars() == 0) return {Verdict::In, bounded_membership(f, I, 0, limits).certificate};

  BoundReport bound = membership_degree_bound(f, I);
  auto D = bound.value_u64();
  if (!D) throw FeasibilityError(bound.value.get_str(), "Hermann bound " + bound.value.get_str() + " exceeds the cap");
  // A cheap attempt first: most members have low-degree cofactors.
  const std::uint64_t quick = static_cast<std::uint64_t>(f.degree());
  if (quick < *D) {
    try {
      auto r = bounded_membership(f, I, quick, limits);
      if (r.verdict == Verdict::In) return r;
    } catch (const FeasibilityError&) {
    }
  }
  try {
    auto r = bounded_membership(f, I, *D, limits);
    if (r.verdict != Verdict::In) r.verdict = Verdict::NotIn;
    return r;
  } catch (const FeasibilityError& e) {
    throw FeasibilityError(bound.value.get_str(), e.what());
  }
}

/// Radical membership. The Groebner engine tests 1 in <I, 1 - t f>; the
/// Kollar-bounded engine solves the same identity as a linear system with
/// cofactor degrees capped by max{3, delta+1}^(n+1), delta >= deg f.
template <Field K>
RadicalVerdict radical_membership(const MultiPoly<K>& f, const Ideal<K>& I,
                                  RadicalEngine engine = RadicalEngine::Groebner, const Limits& limits = {}) {
  if (f.nvars() != I.nvars()) fail(ErrorKind::InvalidArgument, "polynomial and ideal live in different rings");
  if (f.is_zero()) return RadicalVerdict::InRadical;
  if (engine == RadicalEngine::Groebner) {
    return oracle_radical_contains(I, f, limits) ? RadicalVerdict::InRadical : RadicalVerdict::NotInRadical;
  }
  const K& field = I.field();
  const std::size_t n = I.nvars();
  const unsigned delta = std::max<unsigned>(I.max_degree(), static_cast<unsigned>(f.degree()));
  BoundReport bound = kollar_bound(delta, n);
  auto D = bound.value_u64();
  if (!D) throw FeasibilityError(bound.value.get_str(), "Kollar bound exceeds the cap");
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(shift_variables(g, 1));
  auto t = MultiPoly<K>::variable(field, n + 1, 0);
  auto one = MultiPoly<K>::constant(field, n + 1, field.one());
  gens.push_back(one - t * shift_variables(f, 1));
  try {
    auto r = bounded_membership(one, Ideal<K>(field, n + 1, std::move(gens)), *D, limits);
    return r.verdict == Verdict::In ? RadicalVerdict::InRadical : RadicalVerdict::NotInRadical;
  } catch (const FeasibilityError& e) {
    throw FeasibilityError(bound.value.get_str(), e.what());
  }
}

// ---------------------------------------------------------------------------
// Finite-slice tests

template <Field K, class V>
struct SlicedVerdict {
  V verdict;
  mpz_class required;  // least sample count that makes a positive verdict a proof
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::optional<typename K::Element> failed_at;  // smallest failing point
};

namespace detail {

template <Field K>
std::vector<std::size_t> order_by_point(std::span<const typename K::Element> points) {
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  return idx;
}

}  // namespace detail

/// f in I tested slice by slice: f|_{x1=a} in I|_{x1=a} for every a in S.
/// A failing slice proves f not in I. Passing every slice proves f in I only
/// when |S| meets the sample bound (and I is in good position, which is the
/// caller's responsibility); otherwise the answer is SampleTooSmall.
template <Field K>
SlicedVerdict<K, Verdict> finite_slice_membership(const MultiPoly<K>& f, const Ideal<K>& I,
                                                  std::span<const typename K::Element> S,
                                                  const Limits& limits = {}) {
  if (I.nvars() < 2) fail(ErrorKind::InvalidArgument, "sliced membership needs at least two variables");
  require_distinct<K>(S, ErrorKind::DuplicatePoints);
  const std::uint64_t d = static_cast<std::uint64_t>(std::max(f.degree(), 0));
  BoundReport bound = slice_count_algebraic(d, I.max_degree(), std::max<std::size_t>(I.count(), 1), I.nvars());
  SlicedVerdict<K, Verdict> out{Verdict::In, bound.value, S.size(), 0, std::nullopt};

  std::vector<char> pass(S.size(), 0);
  Limits inner = limits;
  inner.jobs = 1;
  parallel_for(S.size(), limits.jobs, [&](std::size_t k) {
    auto slice = slice_ideal(I, S[k]);
    Ideal<K> J(I.field(), I.nvars() - 1, slice.gens);
    pass[k] = ideal_membership(restrict_x1(f, S[k]), J, inner).verdict == Verdict::In;
  });
  for (std::size_t k : detail::order_by_point<K>(S)) {
    if (pass[k]) {
      ++out.passed;
    } else if (!out.failed_at) {
      out.failed_at = S[k];
    }
  }
  if (out.failed_at) {
    out.verdict = Verdict::NotIn;
  } else if (mpz_class(static_cast<unsigned long>(S.size())) < out.required) {
    out.verdict = Verdict::SampleTooSmall;
  }
  return out;
}

/// Radical analogue: sound and complete once |S| > (deg f + 1) deg V(I),
/// for I in good position geometrically; degV is supplied by the caller.
template <Field K>
SlicedVerdict<K, RadicalVerdict> finite_slice_radical_membership(const MultiPoly<K>& f, const Ideal<K>& I,
                                                                 std::span<const typename K::Element> S,
                                                                 std::uint64_t degV,
                                                                 RadicalEngine engine = RadicalEngine::Groebner,
                                                                 const Limits& limits = {}) {
  if (I.nvars() < 2) fail(ErrorKind::InvalidArgument, "sliced membership needs at least two variables");
  require_distinct<K>(S, ErrorKind::DuplicatePoints);
  const std::uint64_t d = static_cast<std::uint64_t>(std::max(f.degree(), 0));
  BoundReport bound = slice_count_geometric(d, degV);
  SlicedVerdict<K, RadicalVerdict> out{RadicalVerdict::InRadical, bound.value, S.size(), 0, std::nullopt};

  std::vector<char> pass(S.size(), 0);
  Limits inner = limits;
  inner.jobs = 1;
  parallel_for(S.size(), limits.jobs, [&](std::size_t k) {
    auto slice = slice_ideal(I, S[k]);
    Ideal<K> J(I.field(), I.nvars() - 1, slice.gens);
    pass[k] = radical_membership(restrict_x1(f, S[k]), J, engine, inner) == RadicalVerdict::InRadical;
  });
  for (std::size_t k : detail::order_by_point<K>(S)) {
    if (pass[k]) {
      ++out.passed;
    } else if (!out.failed_at) {
      out.failed_at = S[k];
    }
  }
  if (out.failed_at) {
    out.verdict = RadicalVerdict::NotInRadical;
  } else if (mpz_class(static_cast<unsigned long>(S.size())) < out.required) {
    out.verdict = RadicalVerdict::SampleTooSmall;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators from slices

/// Rows of `vectors` (over columns indexed by `basis`) brought to reduced
/// echelon form and turned back into polynomials. Gives a canonical basis of
/// their span.
template <Field K>
std::vector<MultiPoly<K>> canonical_span(const K& field, std::size_t nvars, const std::vector<Monomial>& columns,
                                         const std::vector<std::vector<typename K::Element>>& vectors) {
  if (vectors.empty()) return {};
  Matrix<K> m = Matrix<K>::from_rows(field, vectors);
  Echelon<K> e = row_reduce(m);
  std::vector<MultiPoly<K>> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    MultiPoly<K> p(field, nvars);
    for (std::size_t c = 0; c < columns.size(); ++c) p.add_term(columns[c], e.rref(r, c));
    out.push_back(std::move(p));
  }
  return out;
}

/// Basis of { f : deg f <= d, f|_{x1=a} in I|_{x1=a} for every record }.
/// Each slice contributes the linear conditions "remainder of f|_a modulo the
/// degree-<=d part of I|_a vanishes"; the degree-<=d part is read off a
/// Macaulay matrix whose shifts go up to the (n-1)-variable Hermann bound.
template <Field K>
std::vector<MultiPoly<K>> recover_generators_from_slices(const SliceDataset<K>& ds, unsigned d,
                                                         const Limits& limits = {}) {
  if (ds.slices.empty()) fail(ErrorKind::DegenerateDataset, "no slices");
  if (ds.nvars < 2) fail(ErrorKind::InvalidArgument, "datasets need at least two variables");
  const K& field = ds.field;
  const std::size_t n = ds.nvars;
  const std::size_t ny = n - 1;
  const std::vector<Monomial> unknowns = monomials_up_to(n, d);
  detail::check_entries(unknowns.size(), unknowns.size(), limits, std::to_string(d));

  std::vector<std::vector<typename K::Element>> constraints;
  for (std::size_t k = 0; k < ds.slices.size(); ++k) {
    const auto& rec = ds.slices[k];
    Ideal<K> J = ds.slice_ideal(k);

    // Column layout: y-monomials of degree <= top, descending grlex.
    std::vector<Monomial> cols;
    std::vector<std::vector<typename K::Element>> rows;
    if (!J.is_zero()) {
      BoundReport hb = hermann_bound(d, J.max_degree(), J.count(), ny);
      auto D = hb.value_u64();
      if (!D) throw FeasibilityError(hb.value.get_str(), "slice Hermann bound exceeds the cap");
      const std::uint64_t top = *D + J.max_degree();
      const std::uint64_t ncols = count_monomials(ny, top);
      const std::uint64_t nshift = count_monomials(ny, *D);
      if (ncols == UINT64_MAX || nshift == UINT64_MAX) throw FeasibilityError(hb.value.get_str(), "slice system too large");
      detail::check_entries(nshift * J.count(), ncols, limits, hb.value.get_str());
      cols = monomials_up_to(ny, static_cast<unsigned>(top));
    } else {
      cols = monomials_up_to(ny, d);
    }
    std::map<Monomial, std::size_t, GrlexDescending> col_of;
    for (const auto& m : cols) col_of.emplace(m, col_of.size());

    std::vector<std::size_t> pivot_row_of_col(cols.size(), SIZE_MAX);
    std::optional<Echelon<K>> ech;
    if (!J.is_zero()) {
      const auto shifts = monomials_up_to(ny, static_cast<unsigned>(*hermann_bound(d, J.max_degree(), J.count(), ny).value_u64()));
      Matrix<K> mac(field, shifts.size() * J.count(), cols.size());
      std::size_t row = 0;
      for (const auto& g : J.gens()) {
        for (const auto& s : shifts) {
          for (const auto& [m, c] : g.terms()) mac(row, col_of.at(m * s)) = c;
          ++row;
        }
      }
      ech = row_reduce(mac);
      for (std::size_t r = 0; r < ech->rank(); ++r) {
        if (cols[ech->pivots[r]].degree() <= d) pivot_row_of_col[ech->pivots[r]] = r;
      }
    }

    // Remainder of each y-monomial of degree <= d, as a map over free columns.
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].degree() <= d && pivot_row_of_col[c] == SIZE_MAX) free_cols.push_back(c);
    }
    std::vector<std::vector<typename K::Element>> block(free_cols.size(),
                                                        std::vector<typename K::Element>(unknowns.size(), field.zero()));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Monomial y = unknowns[u].without_first();
      const auto scale = power(rec.alpha, unknowns[u][0], field.one());
      const std::size_t c = col_of.at(y);
      const std::size_t pr = pivot_row_of_col[c];
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        if (pr == SIZE_MAX) {
          if (free_cols[f] == c) block[f][u] = scale;
        } else {
          block[f][u] = -(ech->rref(pr, free_cols[f]) * scale);
        }
      }
    }
    for (auto& row : block) constraints.push_back(std::move(row));
  }

  std::vector<std::vector<typename K::Element>> kernel;
  if (constraints.empty()) {
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      std::vector<typename K::Element> e(unknowns.size(), field.zero());
      e[u] = field.one();
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(Matrix<K>::from_rows(field, constraints));
  }
  return canonical_span(field, n, unknowns, kernel);
}

}  // namespace xsect
