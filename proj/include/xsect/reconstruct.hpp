#pragma once

// Principal ideals from finitely many sectional generators. Writing
// f = sum_i a_i(x1) y^i with leading y-monomial y^e, each monic slice
// g_k = f(alpha_k, y) / a_e(alpha_k) exposes the values a_i/a_e at alpha_k, so
// every ratio a_i/a_e is recovered by rational interpolation. Points where a_e
// vanishes are set aside and their factors put back at the end.

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "xsect/linalg.hpp"
#include "xsect/parallel.hpp"
#include "xsect/slicing.hpp"

namespace xsect {

template <Field K>
struct RationalFunction {
  UniPoly<K> num;
  UniPoly<K> den;  // monic, coprime to num

  typename K::Element evaluate(const typename K::Element& x) const { return num.evaluate(x) / den.evaluate(x); }
};

template <Field K>
struct SectionalPoint {
  typename K::Element alpha;
  MultiPoly<K> g;  // in the n-1 variables x2..xn; monic, zero, or 1
};

template <Field K>
struct SectionalData {
  K field;
  std::size_t nvars;  // of the ring f lives in
  std::vector<SectionalPoint<K>> points;
  unsigned d;

  static SectionalData from_dataset(const SliceDataset<K>& ds, unsigned d) {
    SectionalData out{ds.field, ds.nvars, {}, d};
    for (const auto& rec : ds.slices) {
      if (rec.gens.size() != 1) fail(ErrorKind::NotPrincipal, "each record needs exactly one generator");
      out.points.push_back({rec.alpha, rec.gens.front()});
    }
    return out;
  }
};

/// Solves N(x_k) = v_k D(x_k) with deg N <= num_deg, deg D <= den_deg, then
/// reduces to lowest terms and re-checks every node.
template <Field K>
RationalFunction<K> cauchy_interpolate(const K& field,
                                       std::span<const std::pair<typename K::Element, typename K::Element>> nodes,
                                       unsigned num_deg, unsigned den_deg) {
  using Elem = typename K::Element;
  std::vector<Elem> xs;
  for (const auto& [x, v] : nodes) xs.push_back(x);
  require_distinct<K>(xs, ErrorKind::DuplicatePoints);
  if (nodes.size() < static_cast<std::size_t>(num_deg) + den_deg + 1) {
    fail(ErrorKind::NotEnoughSamples, "need " + std::to_string(num_deg + den_deg + 1) + " nodes, got " +
                                          std::to_string(nodes.size()));
  }
  const std::size_t cols = num_deg + den_deg + 2;
  Matrix<K> A(field, nodes.size(), cols);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& [x, v] = nodes[k];
    Elem pw = field.one();
    for (std::size_t j = 0; j <= std::max(num_deg, den_deg); ++j) {
      if (j <= num_deg) A(k, j) = pw;
      if (j <= den_deg) A(k, num_deg + 1 + j) = -(v * pw);
      pw = pw * x;
    }
  }
  for (const auto& vec : nullspace(A)) {
    UniPoly<K> N(field, std::vector<Elem>(vec.begin(), vec.begin() + num_deg + 1));
    UniPoly<K> D(field, std::vector<Elem>(vec.begin() + num_deg + 1, vec.end()));
    if (D.is_zero()) continue;
    UniPoly<K> g = gcd(N, D);
    N = N / g;
    D = D / g;
    const Elem lc = D.leading_coefficient().inverse();
    RationalFunction<K> rf{N.scaled(lc), D.scaled(lc)};
    bool ok = true;
    for (const auto& [x, v] : nodes) {
      const Elem dx = rf.den.evaluate(x);
      if (dx.is_zero() || !(rf.num.evaluate(x) == v * dx)) {
        ok = false;
        break;
      }
    }
    if (ok) return rf;
  }
  fail(ErrorKind::NoInterpolant, "no rational function of degrees (" + std::to_string(num_deg) + ", " +
                                     std::to_string(den_deg) + ") fits the nodes");
}

/// e = the largest leading y-monomial among the g_k (an (n-1)-variable monomial).
template <Field K>
Monomial recover_multidegree(const SectionalData<K>& data) {
  std::optional<Monomial> e;
  for (const auto& p : data.points) {
    if (p.g.is_zero() || p.g.is_constant()) continue;
    const Monomial& lm = p.g.leading_monomial();
    if (!e || grlex_compare(lm, *e) > 0) e = lm;
  }
  if (!e) fail(ErrorKind::InconsistentWithHypothesis, "every sectional generator is constant");
  return *e;
}

template <Field K>
struct DropPartition {
  std::vector<std::size_t> active;
  std::vector<std::size_t> drop;  // indices where a_e(alpha_k) = 0
};

template <Field K>
DropPartition<K> detect_drop_points(const SectionalData<K>& data, const Monomial& e) {
  DropPartition<K> out;
  for (std::size_t k = 0; k < data.points.size(); ++k) {
    const auto& g = data.points[k].g;
    if (!g.is_zero() && g.leading_monomial() == e) {
      out.active.push_back(k);
    } else {
      out.drop.push_back(k);
    }
  }
  if (out.drop.size() + e.degree() > data.d) {
    fail(ErrorKind::TooManyDropPoints, std::to_string(out.drop.size()) + " drop points exceed d - |e| = " +
                                           std::to_string(static_cast<long>(data.d) - static_cast<long>(e.degree())));
  }
  return out;
}

/// Canonical generator (graded lex leading coefficient 1) of the principal
/// ideal whose sectional generators are `data`; every input point is
/// re-checked before returning.
template <Field K>
MultiPoly<K> reconstruct_principal(const SectionalData<K>& data, const Limits& limits = {}) {
  using Elem = typename K::Element;
  const K& field = data.field;
  const unsigned d = data.d;
  if (d < 1) fail(ErrorKind::InvalidArgument, "degree cap must be at least 1");
  if (data.nvars < 2) fail(ErrorKind::InvalidArgument, "reconstruction needs at least two variables");
  if (data.points.size() < 2 * static_cast<std::size_t>(d)) {
    fail(ErrorKind::NotEnoughSamples, "need 2d = " + std::to_string(2 * d) + " points, got " +
                                          std::to_string(data.points.size()));
  }
  std::vector<Elem> alphas;
  for (const auto& p : data.points) {
    if (p.g.nvars() != data.nvars - 1) fail(ErrorKind::InvalidArgument, "sectional generator has the wrong arity");
    alphas.push_back(p.alpha);
  }
  require_distinct<K>(alphas, ErrorKind::DuplicatePoints);

  const Monomial e = recover_multidegree(data);
  const auto part = detect_drop_points(data, e);
  const unsigned r = static_cast<unsigned>(part.drop.size());
  const unsigned den_cap = d - e.degree() - r;

  std::vector<Elem> drop_alphas;
  for (std::size_t k : part.drop) drop_alphas.push_back(data.points[k].alpha);
  const UniPoly<K> drop_poly = UniPoly<K>::from_roots(field, drop_alphas);

  // y-monomials seen on active slices, other than e itself
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (std::size_t k : part.active) {
    for (const auto& [m, c] : data.points[k].g.terms()) {
      if (m != e && m.degree() > d) fail(ErrorKind::VerificationFailed, "slice has a term beyond degree d");
      if (m != e) index.emplace(m, 0);
    }
  }
  std::vector<Monomial> monos;
  for (auto& [m, i] : index) {
    i = monos.size();
    monos.push_back(m);
  }

  std::vector<std::optional<RationalFunction<K>>> ratio(monos.size());
  parallel_for(monos.size(), limits.jobs, [&](std::size_t i) {
    std::vector<std::pair<Elem, Elem>> nodes;
    for (std::size_t k : part.active) {
      const Elem a = data.points[k].alpha;
      nodes.emplace_back(a, data.points[k].g.coefficient(monos[i]) * drop_poly.evaluate(a));
    }
    ratio[i] = cauchy_interpolate<K>(field, nodes, d - monos[i].degree(), den_cap);
  });

  UniPoly<K> ae_tilde = UniPoly<K>::constant(field, field.one());
  for (const auto& rf : ratio) ae_tilde = lcm(ae_tilde, rf->den);
  if (ae_tilde.degree() > static_cast<int>(den_cap)) {
    fail(ErrorKind::VerificationFailed, "leading coefficient would exceed degree d - |e| - r");
  }

  std::map<Monomial, UniPoly<K>, GrlexDescending> parts;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    parts.emplace(monos[i], ratio[i]->num * (ae_tilde / ratio[i]->den));
  }
  parts.emplace(e, ae_tilde * drop_poly);
  MultiPoly<K> f = from_x1_coefficients(field, data.nvars, parts).monic();

  if (f.degree() > static_cast<int>(d)) fail(ErrorKind::VerificationFailed, "reconstruction exceeds degree d");
  UniPoly<K> c = content_x1(f);
  for (const Elem& a : drop_alphas) {
    const UniPoly<K> lin(field, {-a, field.one()});
    while (c.degree() > 0 && divmod(c, lin).second.is_zero()) c = c / lin;
  }
  if (c.degree() > 0) fail(ErrorKind::VerificationFailed, "content has factors away from the drop points");
  for (const auto& p : data.points) {
    if (!(sectional_generator(f, p.alpha) == p.g)) {
      fail(ErrorKind::VerificationFailed, "reconstruction disagrees with the slice at " + p.alpha.to_string());
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// The sharpness family: f = x1^d x2 + 1 and g = a(x1) x2 + b(x1) share their
// sectional generators at 2d - 1 points without generating the same ideal.

enum class Example1Variant { AsPrinted, Corrected };

template <Field K>
struct Example1Pair {
  MultiPoly<K> f;
  MultiPoly<K> g;
  std::vector<typename K::Element> points;
};

template <Field K>
Example1Pair<K> example1_pair(unsigned d, const K& field, Example1Variant variant) {
  using Elem = typename K::Element;
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be at least 1");
  const Elem xi = primitive_root_of_unity(field, 2 * d - 1);
  const Elem two = field.from_int(2);
  const Elem big = power(two, 2 * d - 1, field.one());

  auto x1 = MultiPoly<K>::variable(field, 2, 0);
  auto x2 = MultiPoly<K>::variable(field, 2, 1);
  auto one = MultiPoly<K>::constant(field, 2, field.one());
  auto xd = x1.pow(d);

  MultiPoly<K> a = variant == Example1Variant::Corrected ? x1 * big - xd : MultiPoly<K>::constant(field, 2, big) - x1.pow(d - 1);
  Example1Pair<K> out{xd * x2 + one, a * x2 + (xd - one), {}};
  Elem pt = two;
  for (unsigned i = 1; i <= 2 * d - 1; ++i) {
    pt = pt * xi;
    out.points.push_back(pt);
  }
  require_distinct<K>(out.points, ErrorKind::DuplicatePoints);
  return out;
}

struct SharpnessReport {
  bool slices_equal_at_all_points = false;
  bool ideals_distinct = false;
  unsigned d = 0;
  unsigned generator_degree = 0;  // total degree of x1^d x2 + 1, i.e. d + 1
  std::size_t points = 0;         // 2d - 1
  std::size_t points_agreeing = 0;
};

template <Field K>
SharpnessReport verify_sharpness(unsigned d, const K& field, Example1Variant variant) {
  auto pair = example1_pair(d, field, variant);
  SharpnessReport rep;
  rep.d = d;
  rep.generator_degree = static_cast<unsigned>(pair.f.degree());
  rep.points = pair.points.size();
  for (const auto& a : pair.points) {
    if (sectional_generator(pair.f, a) == sectional_generator(pair.g, a)) ++rep.points_agreeing;
  }
  rep.slices_equal_at_all_points = rep.points_agreeing == rep.points;
  rep.ideals_distinct = !(pair.f.monic() == pair.g.monic());
  return rep;
}

}  // namespace xsect
