#pragma once

// Polynomial text syntax:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   var    := 'x' nat            (1-based, at most nvars)
//   coef   := integer | integer '/' integer      (fractions only over QQ)
// Whitespace is ignored. Output lists terms in descending grlex order.

#include <cctype>
#include <string>
#include <string_view>

#include "xsect/polynomial.hpp"

namespace xsect {

namespace detail {

template <Field K>
class PolyParser {
 public:
  using Elem = typename K::Element;

  PolyParser(std::string_view text, std::size_t nvars, const K& field)
      : text_(text), nvars_(nvars), field_(field) {}

  MultiPoly<K> parse() {
    MultiPoly<K> result(field_, nvars_);
    skip_ws();
    if (at_end()) throw ParseError(ErrorKind::SyntaxError, pos_, "empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [m, c] = term();
      result.add_term(m, negate ? -c : c);
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(ErrorKind::SyntaxError, pos_, std::string("unexpected '") + op + "'");
      negate = op == '-';
      ++pos_;
    }
    return result;
  }

 private:
  std::pair<Monomial, Elem> term() {
    skip_ws();
    Monomial m(nvars_);
    Elem c = field_.one();
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      need_factor = false;
      skip_ws();
      if (at_end() || peek() != '*') return {m, c};
      ++pos_;
      need_factor = true;
    }
    while (need_factor) {
      factor(m);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return {m, c};
  }

  Elem coefficient() {
    const std::size_t start = pos_;
    std::string lit = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(ErrorKind::SyntaxError, pos_, "expected denominator");
      }
      lit += "/" + digits();
    }
    try {
      return field_.parse(lit);
    } catch (const Error& e) {
      throw ParseError(e.kind(), start, e.what());
    }
  }

  void factor(Monomial& m) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || peek() != 'x') throw ParseError(ErrorKind::SyntaxError, pos_, "expected variable");
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(ErrorKind::SyntaxError, pos_, "expected variable index");
    }
    std::string index = digits();
    unsigned long idx = index.size() > 9 ? 0 : std::stoul(index);
    if (idx == 0 || idx > nvars_) {
      throw ParseError(ErrorKind::UnknownVariable, start,
                       "x" + std::to_string(idx) + " is not among x1..x" + std::to_string(nvars_));
    }
    unsigned e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError(ErrorKind::SyntaxError, pos_, "expected exponent");
      }
      std::string exp = digits();
      if (exp.size() > 6) throw ParseError(ErrorKind::SyntaxError, pos_, "exponent too large");
      e = static_cast<unsigned>(std::stoul(exp));
    }
    m[idx - 1] += e;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  const K& field_;
};

inline std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

template <Field K>
MultiPoly<K> parse_poly(std::string_view text, std::size_t nvars, const K& field) {
  return detail::PolyParser<K>(text, nvars, field).parse();
}

template <Field K>
std::string to_string(const MultiPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = c.to_string();
    bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += coeff;
    } else if (coeff == "1") {
      out += detail::monomial_to_string(m);
    } else {
      out += coeff + "*" + detail::monomial_to_string(m);
    }
  }
  return out;
}

template <Field K>
std::string to_string(const UniPoly<K>& p) {
  MultiPoly<K> f(p.field(), 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) f.add_term(Monomial{static_cast<unsigned>(i)}, p.coeffs()[i]);
  return to_string(f);
}

}  // namespace xsect
