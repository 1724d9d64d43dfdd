#pragma once

// Exact scalar fields: the rationals (GMP backed) and prime fields F_p with
// p < 2^64. Generic algorithms are templated on a field descriptor type that
// satisfies the `Field` concept below; elements are plain values with
// arithmetic operators.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "xsect/error.hpp"

namespace xsect {

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t modulus = 0;  // only meaningful for PrimeField

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::PrimeField, p}; }

  /// Accepts `QQ` or `fp:<p>`; the modulus must be prime.
  static FieldSpec parse(std::string_view text);

  std::string to_string() const {
    return kind == Kind::Rationals ? std::string("QQ") : "fp:" + std::to_string(modulus);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= 0xFFFFFFFFull) return (a * b) % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.substr(0, 3) != "fp:" || text.size() == 3) {
    fail(ErrorKind::InvalidArgument, "field must be QQ or fp:<prime>, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(3));
  for (char c : digits) {
    if (c < '0' || c > '9') fail(ErrorKind::InvalidArgument, "bad modulus '" + digits + "'");
  }
  mpz_class m(digits, 10);
  if (m < 2 || mpz_sizeinbase(m.get_mpz_t(), 2) > 64) {
    fail(ErrorKind::NotPrime, "modulus out of range [2, 2^64): " + digits);
  }
  std::uint64_t p = 0;
  mpz_export(&p, nullptr, -1, sizeof(p), 0, 0, m.get_mpz_t());
  if (!is_prime(p)) fail(ErrorKind::NotPrime, "modulus " + digits + " is not prime");
  return prime(p);
}

// ---------------------------------------------------------------------------
// Rationals

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

class RationalField {
 public:
  using Element = Rational;

  Rational zero() const { return Rational(0L); }
  Rational one() const { return Rational(1L); }
  Rational from_int(long v) const { return Rational(v); }
  Rational from_mpz(const mpz_class& v) const { return Rational(v, mpz_class(1)); }

  /// `7`, `-3/4`; the denominator must be nonzero.
  Rational parse(std::string_view text) const {
    std::string s(text);
    auto slash = s.find('/');
    auto check = [&](const std::string& part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) fail(ErrorKind::FieldLiteralError, "bad rational literal '" + s + "'");
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') {
          fail(ErrorKind::FieldLiteralError, "bad rational literal '" + s + "'");
        }
      }
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    check(num, true);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (slash == std::string::npos) return Rational(mpz_class(num, 10), mpz_class(1));
    std::string den = s.substr(slash + 1);
    check(den, false);
    mpz_class d(den, 10);
    if (d == 0) fail(ErrorKind::FieldLiteralError, "zero denominator in '" + s + "'");
    return Rational(mpz_class(num, 10), d);
  }

  FieldSpec spec() const { return FieldSpec::rationals(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---------------------------------------------------------------------------
// Prime fields

class Residue {
 public:
  Residue() = default;
  Residue(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Residue pow(std::uint64_t e) const { return raw(detail::powmod(v_, e, p_), p_); }

  Residue inverse() const {
    if (v_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    // extended Euclid on signed 128-bit to stay exact for 64-bit moduli
    __int128 r0 = p_, r1 = v_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      std::swap(r0, r1);
      r1 -= q * r0;
      std::swap(s0, s1);
      s1 -= q * s0;
    }
    if (s0 < 0) s0 += p_;
    return raw(static_cast<std::uint64_t>(s0), p_);
  }

  std::string to_string() const { return std::to_string(v_); }

  Residue& operator+=(const Residue& o) {
    check(o);
    std::uint64_t s = v_ + o.v_;
    if (s < v_ || s >= p_) s -= p_;
    v_ = s;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check(o);
    v_ = detail::mulmod(v_, o.v_, p_);
    return *this;
  }
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend Residue operator-(const Residue& a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

  friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) { return a.v_ <=> b.v_; }

 private:
  static Residue raw(std::uint64_t v, std::uint64_t p) {
    Residue r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void check(const Residue& o) const {
    if (o.p_ != p_) {
      fail(ErrorKind::FieldMismatch, "residues modulo " + std::to_string(p_) + " and " +
                                         std::to_string(o.p_) + " do not combine");
    }
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

class PrimeField {
 public:
  using Element = Residue;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Residue zero() const { return Residue(0, p_); }
  Residue one() const { return Residue(1, p_); }
  Residue from_int(long v) const {
    if (v >= 0) return Residue(static_cast<std::uint64_t>(v), p_);
    return -Residue(static_cast<std::uint64_t>(-(v + 1)) + 1, p_);
  }
  Residue from_mpz(const mpz_class& v) const {
    mpz_class r = v % mpz_class(std::to_string(p_), 10);
    if (r < 0) r += mpz_class(std::to_string(p_), 10);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
    return Residue(out, p_);
  }

  /// Decimal residues with an optional sign; fractions are rejected.
  Residue parse(std::string_view text) const {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) fail(ErrorKind::FieldLiteralError, "bad residue literal '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        fail(ErrorKind::FieldLiteralError, "bad residue literal '" + s + "' for fp:" + std::to_string(p_));
      }
    }
    Residue r = from_mpz(mpz_class(s.substr(i), 10));
    return s[0] == '-' ? -r : r;
  }

  FieldSpec spec() const { return FieldSpec::prime(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

template <class K>
concept Field = requires(const K& k, const typename K::Element& a, std::string_view s, long v) {
  typename K::Element;
  { k.zero() } -> std::same_as<typename K::Element>;
  { k.one() } -> std::same_as<typename K::Element>;
  { k.from_int(v) } -> std::same_as<typename K::Element>;
  { k.parse(s) } -> std::same_as<typename K::Element>;
  { k.spec() } -> std::same_as<FieldSpec>;
  { a + a } -> std::same_as<typename K::Element>;
  { a * a } -> std::same_as<typename K::Element>;
  { a.inverse() } -> std::same_as<typename K::Element>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

template <Field K>
typename K::Element invert(const typename K::Element& a) {
  return a.inverse();
}

template <class E>
E power(E base, std::uint64_t exp, E one) {
  E result = std::move(one);
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

/// An element of exact multiplicative order k. Over QQ only k = 1, 2 exist.
inline Rational primitive_root_of_unity(const RationalField&, std::uint64_t k) {
  if (k == 1) return Rational(1L);
  if (k == 2) return Rational(-1L);
  fail(ErrorKind::NoRootExists, "QQ has no primitive " + std::to_string(k) + "-th root of unity");
}

inline Residue primitive_root_of_unity(const PrimeField& field, std::uint64_t k) {
  const std::uint64_t p = field.modulus();
  if (k == 0 || (p - 1) % k != 0) {
    fail(ErrorKind::NoRootExists,
         "no primitive " + std::to_string(k) + "-th root of unity in fp:" + std::to_string(p));
  }
  // prime factors of k
  std::uint64_t rest = k;
  std::uint64_t factors[64];
  int nf = 0;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      factors[nf++] = q;
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) factors[nf++] = rest;

  for (std::uint64_t c = 1; c < p; ++c) {
    Residue xi = Residue(c, p).pow((p - 1) / k);
    bool primitive = true;
    for (int i = 0; i < nf && primitive; ++i) {
      if (xi.pow(k / factors[i]).is_one()) primitive = false;
    }
    if (primitive) return xi;
  }
  fail(ErrorKind::NoRootExists, "search exhausted");  // unreachable for prime p
}

/// Runs `fn(field)` with the concrete field type named by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(RationalField{});
  return fn(PrimeField(spec.modulus));
}

}  // namespace xsect
