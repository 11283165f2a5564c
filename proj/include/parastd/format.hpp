#ifndef PARASTD_FORMAT_HPP
#define PARASTD_FORMAT_HPP

#include <string>
#include <vector>

#include "parastd/param_scalar.hpp"

namespace parastd {

/// Canonical text for polynomials: terms in descending order, parameters
/// before variables inside a term, coefficients parenthesized when they
/// are fractions or sums. The parser reads this form back.
class Printer {
 public:
  Printer(std::vector<std::string> params, std::vector<std::string> vars)
      : params_(std::move(params)), vars_(std::move(vars)) {}

  const std::vector<std::string>& params() const noexcept { return params_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }

  static std::string monomial(const Exponent& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += names.at(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  /// Plain polynomial over `names`, in the given order.
  static std::string poly(const QPoly& p, const std::vector<std::string>& names,
                          const MonomialOrder& order) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.sorted_terms(order)) {
      const bool neg = sgn(t.coeff) < 0;
      append_sign(s, neg);
      const Rational a = abs(t.coeff);
      const std::string mono = monomial(t.exp, names);
      if (mono.empty()) s += a.get_str();
      else s += rational_factor(a) + mono;
    }
    return s;
  }

  /// Parameter polynomial in lex order.
  std::string scalar(const AScalar& a) const {
    return poly(a, params_, MonomialOrder::lex(a.nvars()));
  }

  std::string scalar(const ParamScalar& c) const {
    if (c.has_unit_den()) return scalar(c.num());
    return "(" + fraction(c) + ")";
  }

  std::string poly(const ParamPoly& f, const MonomialOrder& order) const {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.sorted_terms(order)) {
      const bool neg = negative(t.coeff);
      append_sign(s, neg);
      s += term(neg ? -t.coeff : t.coeff, monomial(t.exp, vars_));
    }
    return s;
  }

 private:
  static void append_sign(std::string& s, bool neg) {
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
  }

  // "2*", "(1/2)*" or "" for a positive rational in front of a monomial.
  static std::string rational_factor(const Rational& a) {
    if (a == 1) return "";
    if (a.get_den() == 1) return a.get_str() + "*";
    return "(" + a.get_str() + ")*";
  }

  static bool negative(const ParamScalar& c) {
    if (c.is_zero()) return false;
    return sgn(ascalar::lex_leading(c.num()).coeff) < 0;
  }

  static bool single_term(const AScalar& a) { return a.size() == 1; }

  std::string fraction(const ParamScalar& c) const {
    std::string num = scalar(c.num());
    if (!single_term(c.num())) num = "(" + num + ")";
    std::string den = scalar(c.den());
    const auto& dt = *c.den().terms().begin();
    const bool bare = single_term(c.den()) && dt.second == 1 &&
                      ascalar::support_vars(c.den()).size() == 1;
    if (!bare) den = "(" + den + ")";
    return num + "/" + den;
  }

  // Positive-leading coefficient c times monomial `mono`.
  std::string term(const ParamScalar& c, const std::string& mono) const {
    if (c.is_constant()) {
      const Rational q = ascalar::constant_value(c.num()) / ascalar::constant_value(c.den());
      if (mono.empty()) return q.get_str();
      return rational_factor(q) + mono;
    }
    if (c.has_unit_den()) {
      const AScalar& n = c.num();
      if (single_term(n)) {
        const auto& [e, q] = *n.terms().begin();
        std::string s = rational_factor(q) + monomial(e, params_);
        return mono.empty() ? s : s + "*" + mono;
      }
      std::string s = "(" + scalar(n) + ")";
      return mono.empty() ? s : s + "*" + mono;
    }
    std::string s = "(" + fraction(c) + ")";
    return mono.empty() ? s : s + "*" + mono;
  }

  std::vector<std::string> params_;
  std::vector<std::string> vars_;
};

}  // namespace parastd

#endif  // PARASTD_FORMAT_HPP
