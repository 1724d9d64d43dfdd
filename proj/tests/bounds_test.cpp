#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"

using namespace xsect;
using boost::multiprecision::cpp_int;

namespace {

// second, independent big-integer evaluation of every formula
cpp_int ipow(cpp_int b, std::uint64_t e) {
  cpp_int r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

cpp_int ref_hermann(std::uint64_t d, std::uint64_t delta, std::uint64_t r, std::uint64_t n) {
  return cpp_int(d) + 2 * ipow(cpp_int(r) * delta, std::uint64_t{1} << (n - 1));
}
cpp_int ref_kollar(std::uint64_t delta, std::uint64_t n) { return ipow(std::max<std::uint64_t>(3, delta + 1), n + 1); }
cpp_int ref_geometric(std::uint64_t d, std::uint64_t degV) { return cpp_int(d + 1) * degV + 1; }
cpp_int ref_algebraic(std::uint64_t d, std::uint64_t delta, std::uint64_t r, std::uint64_t n) {
  cpp_int inner = cpp_int(d) + 2 * ipow(cpp_int(delta) * r, std::uint64_t{1} << (n - 1));
  return (ipow(inner, n) + 1) * std::max(d, delta) + 1;
}
cpp_int ref_simplified(std::uint64_t delta, std::uint64_t n) {
  return ipow(cpp_int(delta + n), (n + 1) * (n + 1) * (std::uint64_t{1} << n));
}

std::string str(const cpp_int& v) { return v.str(); }

}  // namespace

TEST(Bounds, HermannExamples) {
  EXPECT_EQ(hermann_bound(3, 2, 2, 1).value.get_str(), "11");
  EXPECT_EQ(hermann_bound(3, 2, 2, 3).value.get_str(), "515");
  EXPECT_EQ(hermann_bound(0, 1, 1, 2).value.get_str(), "2");
}

TEST(Bounds, KollarExamples) {
  EXPECT_EQ(kollar_bound(2, 2).value.get_str(), "27");
  EXPECT_EQ(kollar_bound(5, 1).value.get_str(), "36");
  EXPECT_EQ(kollar_bound(0, 3).value.get_str(), "81");
}

TEST(Bounds, GeometricExamples) {
  EXPECT_EQ(slice_count_geometric(3, 2).value.get_str(), "9");
  EXPECT_EQ(slice_count_geometric(0, 1).value.get_str(), "2");
  EXPECT_EQ(slice_count_geometric(2, 3).value.get_str(), "10");
}

TEST(Bounds, AlgebraicExamples) {
  EXPECT_EQ(slice_count_algebraic(2, 2, 2, 2).value.get_str(), "2315");
  EXPECT_EQ(slice_count_algebraic(1, 1, 1, 1).value.get_str(), "5");
  // (514^3 + 1) * 2 + 1, frozen from the independent evaluation below
  EXPECT_EQ(slice_count_algebraic(2, 2, 2, 3).value.get_str(), "271593491");
  EXPECT_EQ(str(ref_algebraic(2, 2, 2, 3)), "271593491");
  EXPECT_EQ(slice_count_algebraic(2, 2, 1, 2).value.get_str(), "203");
}

TEST(Bounds, SimplifiedExamples) {
  EXPECT_EQ(simplified_generator_bound(1, 1).value.get_str(), "256");
  EXPECT_EQ(simplified_generator_bound(2, 1).value.get_str(), "6561");
  EXPECT_EQ(simplified_generator_bound(1, 2).value, mpz_class("150094635296999121"));  // 3^36
  EXPECT_EQ(str(ipow(3, 36)), "150094635296999121");
}

TEST(Bounds, AlgLinSamples) {
  EXPECT_EQ(alg_lin_samples(1, 1, 1).value.get_str(), "3");
  EXPECT_EQ(alg_lin_samples(3, 4, 4).value.get_str(), "16");
}

TEST(Bounds, ReportsParams) {
  auto b = hermann_bound(3, 2, 2, 3);
  EXPECT_EQ(b.name, BoundName::Hermann);
  ASSERT_EQ(b.params.size(), 4u);
  EXPECT_EQ(b.params[0], (std::pair<std::string, std::uint64_t>{"d", 3}));
  EXPECT_EQ(b.params[3], (std::pair<std::string, std::uint64_t>{"n", 3}));
  EXPECT_EQ(*b.value_u64(), 515u);
  EXPECT_FALSE(simplified_generator_bound(3, 3).value_u64().has_value());
}

TEST(Bounds, Preconditions) {
  EXPECT_THROW(hermann_bound(1, 1, 0, 1), Error);
  EXPECT_THROW(hermann_bound(1, 1, 1, 0), Error);
  EXPECT_THROW(slice_count_geometric(1, 0), Error);
  EXPECT_THROW(simplified_generator_bound(0, 1), Error);
  // astronomically large values are refused, not materialised
  EXPECT_THROW(hermann_bound(1, 1000, 1000, 40), Error);
}

TEST(Bounds, AgreeWithSecondImplementation) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t d = rng() % 10, delta = rng() % 8, r = 1 + rng() % 5, n = 1 + rng() % 4;
    EXPECT_EQ(hermann_bound(d, delta, r, n).value.get_str(), str(ref_hermann(d, delta, r, n)));
    EXPECT_EQ(kollar_bound(delta, n).value.get_str(), str(ref_kollar(delta, n)));
    EXPECT_EQ(slice_count_geometric(d, 1 + delta).value.get_str(), str(ref_geometric(d, 1 + delta)));
    EXPECT_EQ(slice_count_algebraic(d, delta, r, n).value.get_str(), str(ref_algebraic(d, delta, r, n)));
    EXPECT_EQ(simplified_generator_bound(1 + delta, n).value.get_str(), str(ref_simplified(1 + delta, n)));
  }
}

TEST(Bounds, MonotoneInEveryParameter) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t d = rng() % 8, delta = 1 + rng() % 5, r = 1 + rng() % 4, n = 1 + rng() % 3;
    std::uint64_t N = rng() % 6, M = rng() % 6;
    const int which = static_cast<int>(rng() % 6);
    auto bump = [&](std::uint64_t v) { return v + 1 + rng() % 3; };
    std::uint64_t d2 = which == 0 ? bump(d) : d, delta2 = which == 1 ? bump(delta) : delta,
                  r2 = which == 2 ? bump(r) : r, n2 = which == 3 ? bump(n) : n, N2 = which == 4 ? bump(N) : N,
                  M2 = which == 5 ? bump(M) : M;
    if (n2 > 4) n2 = n;
    EXPECT_LE(hermann_bound(d, delta, r, n).value, hermann_bound(d2, delta2, r2, n2).value);
    EXPECT_LE(kollar_bound(delta, n).value, kollar_bound(delta2, n2).value);
    EXPECT_LE(slice_count_geometric(d, delta).value, slice_count_geometric(d2, delta2).value);
    EXPECT_LE(slice_count_algebraic(d, delta, r, n).value, slice_count_algebraic(d2, delta2, r2, n2).value);
    EXPECT_LE(simplified_generator_bound(delta, n).value, simplified_generator_bound(delta2, n2).value);
    EXPECT_LE(alg_lin_samples(d, N, M).value, alg_lin_samples(d2, N2, M2).value);
  }
}

TEST(Bounds, SimplifiedOverestimatesAlgebraic) {
  for (std::uint64_t delta = 1; delta <= 3; ++delta) {
    for (std::uint64_t n = 1; n <= 2; ++n) {
      std::uint64_t r = 1;  // C(delta + n, n)
      for (std::uint64_t k = 1; k <= n; ++k) r = r * (delta + k) / k;
      EXPECT_GE(simplified_generator_bound(delta, n).value + 1, slice_count_algebraic(delta, delta, r, n).value)
          << delta << " " << n;
    }
  }
}
