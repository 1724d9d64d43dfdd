#include <gtest/gtest.h>

#include "support.hpp"

using namespace xsect;
using namespace xsect::testing;

namespace {

const RationalField Q;
using QPoly = MultiPoly<RationalField>;
using QIdeal = Ideal<RationalField>;

QIdeal QI(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (const char* s : gens) g.push_back(P(Q, n, s));
  return QIdeal(Q, n, g);
}

template <Field K>
Ideal<K> slice_as_ideal(const Ideal<K>& I, const typename K::Element& a) {
  auto rec = slice_ideal(I, a);
  return Ideal<K>(I.field(), I.nvars() - 1, rec.gens);
}

}  // namespace

TEST(Slice, Examples) {
  auto s = slice_ideal(QI(2, {"x1^2*x2"}), Q.from_int(5));
  ASSERT_EQ(s.gens.size(), 1u);
  EXPECT_EQ(s.gens[0], P(Q, 1, "25*x1"));

  auto t = slice_ideal(QI(2, {"x1^2 + 2*x1*x2 + x2^2", "x1^2 + x1*x2"}), Q.zero());
  ASSERT_EQ(t.gens.size(), 1u);
  EXPECT_EQ(t.gens[0], P(Q, 1, "x1^2"));

  EXPECT_EQ(slice_ideal(QI(2, {"x2 - x1^2"}), Q.from_int(3)).gens[0], P(Q, 1, "x1 - 9"));

  auto z = slice_ideal(QI(2, {"x1*x2"}), Q.zero());
  ASSERT_EQ(z.gens.size(), 1u);
  EXPECT_TRUE(z.gens[0].is_zero());
  EXPECT_THROW(slice_ideal(QI(1, {"x1"}), Q.zero()), Error);
}

TEST(SectionalGenerator, Examples) {
  EXPECT_EQ(sectional_generator(P(Q, 2, "x1*x2 + 1"), Q.from_int(4)), P(Q, 1, "x1 + 1/4"));
  EXPECT_EQ(sectional_generator(P(Q, 2, "x1*x2 - x2 + 1"), Q.one()), P(Q, 1, "1"));
  EXPECT_TRUE(sectional_generator(P(Q, 2, "x1*x2 - 2*x2"), Q.from_int(2)).is_zero());
}

TEST(SectionalGenerator, MonicAndProportional) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + rng() % 2;
    auto f = random_poly(kF65537, n, 1 + rng() % 4, 1 + rng() % 5, rng);
    auto a = random_scalar(kF65537, rng);
    auto g = sectional_generator(f, a);
    auto s = restrict_x1(f, a);
    if (s.is_zero()) {
      EXPECT_TRUE(g.is_zero());
      continue;
    }
    EXPECT_TRUE(g.leading_coefficient().is_one());
    EXPECT_EQ(g * s.leading_coefficient(), s);
  }
}

TEST(SectionalGenerator, ProductSlices) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(kF65537, 3, 1 + rng() % 3, 1 + rng() % 4, rng);
    auto g = random_poly(kF65537, 3, 1 + rng() % 3, 1 + rng() % 4, rng);
    auto a = random_scalar(kF65537, rng);
    EXPECT_EQ(sectional_generator(f * g, a), (sectional_generator(f, a) * sectional_generator(g, a)).monic());
  }
}

TEST(Dataset, Examples) {
  std::vector<Rational> pts{Q.from_int(1), Q.from_int(2), Q.from_int(3), Q.from_int(4)};
  auto ds = build_dataset<RationalField>(QI(2, {"x1*x2 + 1"}), pts, SliceMode::SectionalGenerators);
  ASSERT_EQ(ds.slices.size(), 4u);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(ds.slices[k - 1].gens[0], P(Q, 1, ("x1 + 1/" + std::to_string(k)).c_str()));
  }
  std::vector<Rational> zero{Q.zero()};
  auto full = build_dataset<RationalField>(QI(2, {"x1*x2"}), zero, SliceMode::FullSlices);
  ASSERT_EQ(full.slices.size(), 1u);
  EXPECT_TRUE(full.slice_ideal(0).is_zero());

  std::vector<Rational> dup{Q.one(), Q.one()};
  try {
    build_dataset<RationalField>(QI(2, {"x1*x2"}), dup, SliceMode::FullSlices);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoints);
  }
  try {
    build_dataset<RationalField>(QI(2, {"x1", "x2"}), pts, SliceMode::SectionalGenerators);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrincipal);
  }
}

TEST(Slice, MembershipContract) {
  // f in I + <x1 - a>  iff  f|a in I|a
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    auto g1 = random_poly(kF65537, 3, 1 + rng() % 2, 1 + rng() % 3, rng);
    auto g2 = random_poly(kF65537, 3, 1 + rng() % 2, 1 + rng() % 3, rng);
    Ideal<PrimeField> I(kF65537, 3, {g1, g2});
    auto a = random_scalar(kF65537, rng);
    auto f = rng() % 2 ? random_poly(kF65537, 3, 2, 3, rng)
                       : g1 * random_poly(kF65537, 3, 1, 2, rng) + (MultiPoly<PrimeField>::variable(kF65537, 3, 0) -
                                                                   MultiPoly<PrimeField>::constant(kF65537, 3, a)) *
                                                                      random_poly(kF65537, 3, 1, 2, rng);
    auto x1a = MultiPoly<PrimeField>::variable(kF65537, 3, 0) - MultiPoly<PrimeField>::constant(kF65537, 3, a);
    auto big = buchberger(Ideal<PrimeField>(kF65537, 3, {g1, g2, x1a}));
    auto small = buchberger(slice_as_ideal(I, a));
    EXPECT_EQ(oracle_contains(big, f), oracle_contains(small, restrict_x1(f, a)));
  }
}

TEST(Groebner, Examples) {
  auto gb = buchberger(QI(2, {"x1"}));
  EXPECT_EQ(gb.basis, std::vector<QPoly>{P(Q, 2, "x1")});
  EXPECT_TRUE(buchberger(QI(2, {"x1*x2 - 1", "x1"})).is_unit());
  auto twisted = buchberger(QI(3, {"x2 - x1^2", "x3 - x1^3"}));
  EXPECT_TRUE(normal_form(P(Q, 3, "x2*x3 - x1^5"), twisted).is_zero());
  EXPECT_FALSE(normal_form(P(Q, 3, "x2*x3 - x1^4"), twisted).is_zero());
}

TEST(Groebner, NormalFormExamples) {
  auto gb = buchberger(QI(2, {"x1"}));
  EXPECT_TRUE(normal_form(P(Q, 2, "x1^2"), gb).is_zero());
  EXPECT_EQ(normal_form(P(Q, 2, "x2 + 1"), gb), P(Q, 2, "x2 + 1"));
  auto gb2 = buchberger(QI(2, {"x2 - x1^2", "x1^3"}));
  EXPECT_TRUE(normal_form(P(Q, 2, "x2^3"), gb2).is_zero());
}

TEST(Groebner, IdealEqualExamples) {
  EXPECT_FALSE(ideal_equal(QI(2, {"x1*x2"}), QI(2, {"x1^2*x2"})));
  EXPECT_TRUE(ideal_equal(QI(2, {"x1"}), QI(2, {"3*x1"})));
  EXPECT_FALSE(ideal_equal(QI(2, {"x1^2 + 2*x1*x2 + x2^2", "x1^2 + x1*x2"}), QI(2, {"x1 + x2"})));
}

TEST(Groebner, IntersectExamples) {
  EXPECT_TRUE(ideal_equal(ideal_intersect(QI(2, {"x1"}), QI(2, {"x2"})), QI(2, {"x1*x2"})));
  EXPECT_TRUE(ideal_equal(ideal_intersect(QI(2, {"x1"}), QI(2, {"x1"})), QI(2, {"x1"})));
  EXPECT_TRUE(ideal_equal(ideal_intersect(QI(2, {"x2^2", "x1"}), QI(2, {"x2^2", "x1 - 1"})),
                          QI(2, {"x2^2", "x1^2 - x1"})));
}

TEST(Groebner, BasisProperties) {
  // every S-polynomial reduces to zero, leading terms are not divisible by
  // each other, and every generator reduces to zero
  std::mt19937_64 rng(54);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + rng() % 2;
    std::vector<MultiPoly<PrimeField>> gens;
    for (int k = 0, r = 1 + rng() % 3; k < r; ++k) gens.push_back(random_poly(kF65537, n, 1 + rng() % 2, 1 + rng() % 3, rng));
    Ideal<PrimeField> I(kF65537, n, gens);
    auto gb = buchberger(I);
    for (const auto& g : gens) EXPECT_TRUE(oracle_contains(gb, g));
    for (std::size_t a = 0; a < gb.basis.size(); ++a) {
      EXPECT_TRUE(gb.basis[a].leading_coefficient().is_one());
      for (std::size_t b = 0; b < gb.basis.size(); ++b) {
        if (a == b) continue;
        EXPECT_FALSE(gb.basis[b].leading_monomial().divides(gb.basis[a].leading_monomial()));
        const auto& fa = gb.basis[a];
        const auto& fb = gb.basis[b];
        auto l = lcm(fa.leading_monomial(), fb.leading_monomial());
        auto s = fa.times_term(l / fa.leading_monomial(), kF65537.one()) -
                 fb.times_term(l / fb.leading_monomial(), kF65537.one());
        EXPECT_TRUE(normal_form(s, gb).is_zero());
      }
    }
    // permuting generators gives the identical basis
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(buchberger(Ideal<PrimeField>(kF65537, n, gens)).basis, gb.basis);
  }
}

TEST(Groebner, IntersectCommutativeIdempotent) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 25; ++i) {
    Ideal<PrimeField> I(kF65537, 2, {random_poly(kF65537, 2, 1 + rng() % 2, 2, rng)});
    Ideal<PrimeField> J(kF65537, 2, {random_poly(kF65537, 2, 1 + rng() % 2, 2, rng), random_poly(kF65537, 2, 2, 2, rng)});
    EXPECT_TRUE(ideal_equal(ideal_intersect(I, J), ideal_intersect(J, I)));
    EXPECT_TRUE(ideal_equal(ideal_intersect(I, I), I));
  }
}

TEST(Groebner, CapExceeded) {
  Limits tight;
  tight.max_basis_size = 2;
  try {
    buchberger(QI(3, {"x2 - x1^2", "x3 - x1^3", "x1*x2*x3 - 1"}), MonomialOrder::grlex(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Groebner, EliminationOrder) {
  // eliminating x1 from <x2 - x1^2, x3 - x1^3> leaves the cusp x2^3 - x3^2
  auto gb = buchberger(QI(3, {"x2 - x1^2", "x3 - x1^3"}), MonomialOrder::elimination(1));
  std::vector<QPoly> free_of_x1;
  for (const auto& g : gb.basis) {
    if (std::none_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[0] != 0; })) {
      free_of_x1.push_back(g);
    }
  }
  ASSERT_EQ(free_of_x1.size(), 1u);
  EXPECT_EQ(free_of_x1[0].monic(), P(Q, 3, "x2^3 - x3^2").monic());
}

TEST(Counterexamples, SameSlicesDifferentIdeals) {
  std::mt19937_64 rng(56);
  auto I = QI(2, {"x1*x2"});
  auto J = QI(2, {"x1^2*x2"});
  auto pts = distinct_points(Q, 20, rng);
  for (const auto& a : pts) EXPECT_TRUE(ideal_equal(slice_as_ideal(I, a), slice_as_ideal(J, a))) << a.to_string();
  EXPECT_FALSE(ideal_equal(I, J));

  auto E = QI(2, {"x1^2 + 2*x1*x2 + x2^2", "x1^2 + x1*x2"});
  auto L = QI(2, {"x1 + x2"});
  for (const auto& a : pts) {
    if (a.is_zero()) continue;
    EXPECT_TRUE(ideal_equal(slice_as_ideal(E, a), slice_as_ideal(L, a))) << a.to_string();
  }
  EXPECT_FALSE(ideal_equal(slice_as_ideal(E, Q.zero()), slice_as_ideal(L, Q.zero())));
  EXPECT_FALSE(ideal_equal(E, L));
}
