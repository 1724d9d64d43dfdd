#pragma once

// Buchberger's algorithm with the normal selection strategy and both
// Buchberger criteria. This is the independent oracle the rest of the library
// is checked against, and the default engine for radical membership.

#include <algorithm>
#include <map>
#include <vector>

#include "xsect/parallel.hpp"
#include "xsect/slicing.hpp"

namespace xsect {

template <Field K>
struct GroebnerBasis {
  K field;
  std::size_t nvars;
  MonomialOrder order;
  std::vector<MultiPoly<K>> basis;  // reduced, monic, sorted by descending leading monomial

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero(); }
};

namespace detail {

struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

template <Field K>
using OrderedTerms = std::map<Monomial, typename K::Element, OrderGreater>;

template <Field K>
OrderedTerms<K> ordered(const MultiPoly<K>& f, const MonomialOrder& order) {
  OrderedTerms<K> t(OrderGreater{order});
  for (const auto& [m, c] : f.terms()) t.emplace(m, c);
  return t;
}

template <Field K>
MultiPoly<K> unordered(const K& field, std::size_t nvars, const OrderedTerms<K>& t) {
  MultiPoly<K> f(field, nvars);
  for (const auto& [m, c] : t) f.add_term(m, c);
  return f;
}

/// Basis element cached with its leading monomial under the working order.
template <Field K>
struct GbElem {
  OrderedTerms<K> terms;  // monic
  Monomial lm;
};

template <Field K>
void sub_multiple(OrderedTerms<K>& p, const OrderedTerms<K>& g, const Monomial& shift, const typename K::Element& c) {
  for (const auto& [m, gc] : g) {
    Monomial mm = m * shift;
    auto [it, inserted] = p.try_emplace(mm, -(gc * c));
    if (!inserted) {
      it->second -= gc * c;
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

/// Full remainder of p on division by the basis elements in `G`.
template <Field K>
OrderedTerms<K> reduce(OrderedTerms<K> p, const std::vector<GbElem<K>>& G, const MonomialOrder& order) {
  OrderedTerms<K> rem(OrderGreater{order});
  while (!p.empty()) {
    auto lead = p.begin();
    const GbElem<K>* div = nullptr;
    for (const auto& g : G) {
      if (g.lm.divides(lead->first)) {
        div = &g;
        break;
      }
    }
    if (div == nullptr) {
      rem.emplace_hint(rem.end(), lead->first, lead->second);
      p.erase(lead);
      continue;
    }
    Monomial shift = lead->first / div->lm;
    auto c = lead->second;
    sub_multiple<K>(p, div->terms, shift, c);
  }
  return rem;
}

template <Field K>
GbElem<K> make_monic(OrderedTerms<K> t) {
  auto inv = t.begin()->second.inverse();
  for (auto& [m, c] : t) c *= inv;
  Monomial lm = t.begin()->first;
  return {std::move(t), std::move(lm)};
}

}  // namespace detail

/// Reduced Groebner basis of I under `order` (graded lex unless stated).
template <Field K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, MonomialOrder order = MonomialOrder::grlex(), const Limits& limits = {}) {
  using detail::GbElem;
  const K& field = I.field();
  const std::size_t n = I.nvars();
  GroebnerBasis<K> out{field, n, order, {}};
  if (I.is_zero()) {
    out.basis.emplace_back(field, n);
    return out;
  }

  std::vector<GbElem<K>> G;
  auto unit = [&] {
    out.basis = {MultiPoly<K>::constant(field, n, field.one())};
    return out;
  };
  for (const auto& f : I.gens()) {
    if (f.is_constant()) return unit();
    G.push_back(detail::make_monic<K>(detail::ordered(f, order)));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(G[i].lm, G[k].lm)});
  };
  for (std::size_t k = 1; k < G.size(); ++k) add_pairs_for(k);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair pr = *best;
    pairs.erase(best);

    const auto& gi = G[pr.i];
    const auto& gj = G[pr.j];
    if (gi.lm.coprime_with(gj.lm)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].lm.divides(pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    detail::OrderedTerms<K> s(detail::OrderGreater{order});
    detail::sub_multiple<K>(s, gi.terms, pr.lcm / gi.lm, -field.one());
    detail::sub_multiple<K>(s, gj.terms, pr.lcm / gj.lm, field.one());
    auto r = detail::reduce<K>(std::move(s), G, order);
    if (r.empty()) continue;
    if (r.begin()->first.is_one()) return unit();
    G.push_back(detail::make_monic<K>(std::move(r)));
    if (G.size() > limits.max_basis_size) {
      fail(ErrorKind::CapExceeded, "Groebner basis grew past " + std::to_string(limits.max_basis_size) + " elements");
    }
    add_pairs_for(G.size() - 1);
  }

  // Minimalise, then inter-reduce.
  std::vector<GbElem<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lm.divides(G[i].lm) && (G[j].lm != G[i].lm || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const GbElem<K>& a, const GbElem<K>& b) { return order.greater(a.lm, b.lm); });
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GbElem<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // the leading term is irreducible by the others; reduce the tail only
    detail::OrderedTerms<K> tail = minimal[i].terms;
    auto lead = *tail.begin();
    tail.erase(tail.begin());
    auto red = detail::reduce<K>(std::move(tail), others, order);
    red.emplace(lead.first, lead.second);
    minimal[i].terms = std::move(red);
  }
  for (const auto& g : minimal) out.basis.push_back(detail::unordered(field, n, g.terms));
  return out;
}

/// Remainder of f on division by a Groebner basis; zero iff f lies in the ideal.
template <Field K>
MultiPoly<K> normal_form(const MultiPoly<K>& f, const GroebnerBasis<K>& gb) {
  std::vector<detail::GbElem<K>> G;
  for (const auto& g : gb.basis) {
    if (g.is_zero()) continue;
    G.push_back(detail::make_monic<K>(detail::ordered(g, gb.order)));
  }
  return detail::unordered(f.field(), f.nvars(), detail::reduce<K>(detail::ordered(f, gb.order), G, gb.order));
}

template <Field K>
bool oracle_contains(const GroebnerBasis<K>& gb, const MultiPoly<K>& f) {
  return normal_form(f, gb).is_zero();
}

template <Field K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const Limits& limits = {}) {
  if (I.nvars() != J.nvars()) fail(ErrorKind::InvalidArgument, "ideals live in different rings");
  return buchberger(I, MonomialOrder::grlex(), limits).basis == buchberger(J, MonomialOrder::grlex(), limits).basis;
}

/// I + J
template <Field K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
  std::vector<MultiPoly<K>> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal<K>(I.field(), I.nvars(), std::move(gens));
}

/// I ∩ J via t*I + (1 - t)*J, eliminating the auxiliary first variable t.
template <Field K>
Ideal<K> ideal_intersect(const Ideal<K>& I, const Ideal<K>& J, const Limits& limits = {}) {
  if (I.nvars() != J.nvars()) fail(ErrorKind::InvalidArgument, "ideals live in different rings");
  const K& field = I.field();
  const std::size_t n = I.nvars();
  auto t = MultiPoly<K>::variable(field, n + 1, 0);
  auto one = MultiPoly<K>::constant(field, n + 1, field.one());
  std::vector<MultiPoly<K>> gens;
  for (const auto& f : I.gens()) gens.push_back(t * shift_variables(f, 1));
  for (const auto& g : J.gens()) gens.push_back((one - t) * shift_variables(g, 1));
  auto gb = buchberger(Ideal<K>(field, n + 1, std::move(gens)), MonomialOrder::elimination(1), limits);
  std::vector<MultiPoly<K>> kept;
  for (const auto& g : gb.basis) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const auto& term) { return term.first[0] != 0; });
    if (!has_t) kept.push_back(drop_first_variable(g));
  }
  if (kept.empty()) kept.emplace_back(field, n);
  return Ideal<K>(field, n, std::move(kept));
}

/// f in rad(I) iff 1 lies in <f_1, ..., f_r, 1 - t f> (t a new leading variable).
template <Field K>
bool oracle_radical_contains(const Ideal<K>& I, const MultiPoly<K>& f, const Limits& limits = {}) {
  const K& field = I.field();
  const std::size_t n = I.nvars();
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(shift_variables(g, 1));
  auto t = MultiPoly<K>::variable(field, n + 1, 0);
  gens.push_back(MultiPoly<K>::constant(field, n + 1, field.one()) - t * shift_variables(f, 1));
  return buchberger(Ideal<K>(field, n + 1, std::move(gens)), MonomialOrder::grlex(), limits).is_unit();
}

}  // namespace xsect
