#pragma once

#include <random>
#include <vector>

#include "xsect.hpp"

namespace xsect::testing {

inline const PrimeField kF65537{65537};

template <Field K>
typename K::Element random_scalar(const K& field, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return Residue(std::uniform_int_distribution<std::uint64_t>(0, field.modulus() - 1)(rng), field.modulus());
  } else {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
  }
}

template <Field K>
typename K::Element random_nonzero(const K& field, std::mt19937_64& rng) {
  for (;;) {
    auto c = random_scalar(field, rng);
    if (!c.is_zero()) return c;
  }
}

/// Up to `terms` random terms of degree <= deg; exact degree `deg` is forced
/// when `exact` is set (deg > 0).
template <Field K>
MultiPoly<K> random_poly(const K& field, std::size_t n, unsigned deg, std::size_t terms, std::mt19937_64& rng,
                         bool exact = true) {
  auto monos = monomials_up_to(n, deg);
  MultiPoly<K> f(field, n);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (std::size_t i = 0; i < terms; ++i) f += MultiPoly<K>::term(field, monos[pick(rng)], random_nonzero(field, rng));
  if (exact && f.degree() < static_cast<int>(deg)) {
    std::vector<Monomial> top;
    for (const auto& m : monos) {
      if (m.degree() == deg) top.push_back(m);
    }
    auto m = top[std::uniform_int_distribution<std::size_t>(0, top.size() - 1)(rng)];
    f += MultiPoly<K>::term(field, m, random_nonzero(field, rng));
  }
  return f;
}

template <Field K>
UniPoly<K> random_unipoly(const K& field, unsigned deg, std::mt19937_64& rng) {
  std::vector<typename K::Element> c;
  for (unsigned i = 0; i < deg; ++i) c.push_back(random_scalar(field, rng));
  c.push_back(random_nonzero(field, rng));
  return UniPoly<K>(field, std::move(c));
}

template <Field K>
MultiPoly<K> lift_x1(const UniPoly<K>& a, std::size_t n) {
  MultiPoly<K> f(a.field(), n);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    Monomial m(n);
    m[0] = static_cast<unsigned>(k);
    f.add_term(m, a.coeffs()[k]);
  }
  return f;
}

template <Field K>
MultiPoly<K> P(const K& field, std::size_t n, std::string_view text) {
  return parse_poly(text, n, field);
}

/// Oracle ideal equality for two principal ideals given by generators.
template <Field K>
bool same_ideal(const MultiPoly<K>& f, const MultiPoly<K>& g) {
  return ideal_equal(Ideal<K>(f.field(), f.nvars(), {f}), Ideal<K>(g.field(), g.nvars(), {g}));
}

}  // namespace xsect::testing
