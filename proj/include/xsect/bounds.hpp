#pragma once

// Exact big-integer calculators for the degree and sample-count bounds.
// Strict inequalities |S| > B are reported as the least admissible count B + 1.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xsect/error.hpp"

namespace xsect {

enum class BoundName { Hermann, Kollar, SliceGeometric, SliceAlgebraic, SimplifiedGenerator, AlgLinSamples };

inline std::string to_string(BoundName b) {
  switch (b) {
    case BoundName::Hermann: return "Hermann";
    case BoundName::Kollar: return "Kollar";
    case BoundName::SliceGeometric: return "SliceGeometric";
    case BoundName::SliceAlgebraic: return "SliceAlgebraic";
    case BoundName::SimplifiedGenerator: return "SimplifiedGenerator";
    case BoundName::AlgLinSamples: return "AlgLinSamples";
  }
  return "?";
}

struct BoundReport {
  BoundName name;
  std::vector<std::pair<std::string, std::uint64_t>> params;  // in argument order
  mpz_class value;

  std::optional<std::uint64_t> value_u64() const {
    if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return std::nullopt;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
  }
};

namespace detail {

// Results beyond this many bits are refused rather than materialised.
inline constexpr double kMaxBoundBits = 1u << 26;

inline mpz_class big(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

inline mpz_class checked_pow(const mpz_class& base, std::uint64_t exp) {
  const double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) * static_cast<double>(exp);
  if (bits > kMaxBoundBits) {
    throw FeasibilityError("~2^" + std::to_string(static_cast<std::uint64_t>(bits)),
                           "bound has about " + std::to_string(static_cast<std::uint64_t>(bits)) +
                               " bits; refusing to materialise it");
  }
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::uint64_t two_to(std::uint64_t k) {
  if (k >= 63) fail(ErrorKind::InvalidArgument, "exponent 2^" + std::to_string(k) + " out of range");
  return std::uint64_t{1} << k;
}

inline void require(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace detail

/// Cofactor degree bound: d + 2 (r delta)^(2^(n-1)).
inline BoundReport hermann_bound(std::uint64_t d, std::uint64_t delta, std::uint64_t r, std::uint64_t n) {
  detail::require(r >= 1 && n >= 1, "hermann_bound needs r >= 1 and n >= 1");
  mpz_class v = detail::big(d) + 2 * detail::checked_pow(detail::big(r) * detail::big(delta), detail::two_to(n - 1));
  return {BoundName::Hermann, {{"d", d}, {"delta", delta}, {"r", r}, {"n", n}}, v};
}

/// Certificate degree bound for the radical test: max{3, delta+1}^(n+1).
inline BoundReport kollar_bound(std::uint64_t delta, std::uint64_t n) {
  detail::require(n >= 1, "kollar_bound needs n >= 1");
  mpz_class base = detail::big(std::max<std::uint64_t>(3, delta + 1));
  return {BoundName::Kollar, {{"delta", delta}, {"n", n}}, detail::checked_pow(base, n + 1)};
}

/// Least |S| with |S| > (d+1) deg V.
inline BoundReport slice_count_geometric(std::uint64_t d, std::uint64_t degV) {
  detail::require(degV >= 1, "slice_count_geometric needs degV >= 1");
  mpz_class v = (detail::big(d) + 1) * detail::big(degV) + 1;
  return {BoundName::SliceGeometric, {{"d", d}, {"degV", degV}}, v};
}

/// Least |S| with |S| > ((d + 2(delta r)^(2^(n-1)))^n + 1) max{d, delta}.
inline BoundReport slice_count_algebraic(std::uint64_t d, std::uint64_t delta, std::uint64_t r, std::uint64_t n) {
  detail::require(r >= 1 && n >= 1, "slice_count_algebraic needs r >= 1 and n >= 1");
  mpz_class inner = detail::big(d) + 2 * detail::checked_pow(detail::big(delta) * detail::big(r), detail::two_to(n - 1));
  mpz_class v = (detail::checked_pow(inner, n) + 1) * detail::big(std::max(d, delta)) + 1;
  return {BoundName::SliceAlgebraic, {{"d", d}, {"delta", delta}, {"r", r}, {"n", n}}, v};
}

/// (delta + n)^((n+1)^2 2^n).
inline BoundReport simplified_generator_bound(std::uint64_t delta, std::uint64_t n) {
  detail::require(delta >= 1 && n >= 1, "simplified_generator_bound needs delta >= 1 and n >= 1");
  const std::uint64_t exp = (n + 1) * (n + 1) * detail::two_to(n);
  return {BoundName::SimplifiedGenerator, {{"delta", delta}, {"n", n}},
          detail::checked_pow(detail::big(delta + n), exp)};
}

/// Least |S| with |S| > d max{N, M+1} for a parametric N x M system.
inline BoundReport alg_lin_samples(std::uint64_t d, std::uint64_t N, std::uint64_t M) {
  mpz_class v = detail::big(d) * detail::big(std::max(N, M + 1)) + 1;
  return {BoundName::AlgLinSamples, {{"d", d}, {"N", N}, {"M", M}}, v};
}

}  // namespace xsect
