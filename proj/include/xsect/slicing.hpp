#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "xsect/polynomial.hpp"

namespace xsect {

/// Generators plus ambient arity. Zero generators are dropped; the zero ideal
/// keeps a single zero generator.
template <Field K>
class Ideal {
 public:
  using Poly = MultiPoly<K>;

  Ideal(K field, std::size_t nvars, std::vector<Poly> gens) : field_(std::move(field)), nvars_(nvars) {
    if (gens.empty()) fail(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
    for (auto& g : gens) {
      if (g.nvars() != nvars_) fail(ErrorKind::InvalidArgument, "generator arity does not match the ideal");
      if (!(g.field() == field_)) fail(ErrorKind::FieldMismatch, "generator over a different field");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) gens_.emplace_back(field_, nvars_);
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// Number of nonzero generators.
  std::size_t count() const { return is_zero() ? 0 : gens_.size(); }

  /// delta: the largest generator degree (0 for the zero ideal).
  unsigned max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return static_cast<unsigned>(d);
  }

 private:
  K field_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
};

/// I restricted to x1 = alpha, living in the (n-1)-variable ring.
template <Field K>
struct SliceRecord {
  typename K::Element alpha;
  std::vector<MultiPoly<K>> gens;
};

enum class SliceMode { FullSlices, SectionalGenerators };

template <Field K>
struct SliceDataset {
  K field;
  std::size_t nvars;  // arity of the sliced ring; records live in nvars - 1 variables
  SliceMode mode;
  std::vector<SliceRecord<K>> slices;

  Ideal<K> slice_ideal(std::size_t k) const { return Ideal<K>(field, nvars - 1, slices[k].gens); }
};

template <Field K>
SliceRecord<K> slice_ideal(const Ideal<K>& I, const typename K::Element& alpha) {
  if (I.nvars() < 2) fail(ErrorKind::InvalidArgument, "slicing needs at least two variables");
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : I.gens()) {
    auto s = restrict_x1(g, alpha);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  if (gens.empty()) gens.emplace_back(I.field(), I.nvars() - 1);
  return {alpha, std::move(gens)};
}

/// f(alpha, y) scaled to leading coefficient 1 in graded lex on y; zero stays zero.
template <Field K>
MultiPoly<K> sectional_generator(const MultiPoly<K>& f, const typename K::Element& alpha) {
  if (f.nvars() < 2) fail(ErrorKind::InvalidArgument, "sectional generators need at least two variables");
  return restrict_x1(f, alpha).monic();
}

template <Field K>
void require_distinct(std::span<const typename K::Element> points, ErrorKind kind) {
  std::vector<typename K::Element> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(kind, "points must be pairwise distinct");
  }
}

template <Field K>
SliceDataset<K> build_dataset(const Ideal<K>& I, std::span<const typename K::Element> points, SliceMode mode) {
  require_distinct<K>(points, ErrorKind::DuplicatePoints);
  if (mode == SliceMode::SectionalGenerators && I.gens().size() != 1) {
    fail(ErrorKind::NotPrincipal, "sectional datasets need a single generator");
  }
  SliceDataset<K> ds{I.field(), I.nvars(), mode, {}};
  for (const auto& a : points) {
    if (mode == SliceMode::FullSlices) {
      ds.slices.push_back(slice_ideal(I, a));
    } else {
      ds.slices.push_back({a, {sectional_generator(I.gens().front(), a)}});
    }
  }
  return ds;
}

/// `count` pairwise distinct field elements drawn from `rng`. Over QQ they are
/// integers from a window a few times wider than `count`.
template <Field K, class Rng>
std::vector<typename K::Element> distinct_points(const K& field, std::size_t count, Rng& rng) {
  std::vector<typename K::Element> out;
  std::set<typename K::Element> seen;
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (count > field.modulus()) fail(ErrorKind::InvalidArgument, "not enough field elements");
    std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
    while (out.size() < count) {
      auto e = Residue(dist(rng), field.modulus());
      if (seen.insert(e).second) out.push_back(e);
    }
  } else {
    const long w = static_cast<long>(4 * count + 10);
    std::uniform_int_distribution<long> dist(-w, w);
    while (out.size() < count) {
      auto e = field.from_int(dist(rng));
      if (seen.insert(e).second) out.push_back(e);
    }
  }
  return out;
}

}  // namespace xsect
