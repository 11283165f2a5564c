#ifndef PARASTD_PARAM_POLY_HPP
#define PARASTD_PARAM_POLY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "parastd/division.hpp"
#include "parastd/param_scalar.hpp"

namespace parastd {

/// A rational parameter point c in Q^m.
using ParamPoint = std::vector<Rational>;

/// Polynomial with constant coefficients, viewed over m parameters.
inline ParamPoly lift(const QPoly& p, std::size_t m) {
  return p.map_coefficients([m](const Rational& c) { return ParamScalar::constant(m, c); });
}

/// Evaluates every coefficient at c. Throws DenominatorVanishes when c is a
/// pole of some coefficient.
inline QPoly specialize(const ParamPoly& f, const ParamPoint& c) {
  QPoly r(f.nvars());
  for (const auto& [e, s] : f.terms()) {
    if (s.nparams() != c.size())
      throw Error(ErrorCode::DimensionMismatch, "parameter point has wrong length");
    const Rational d = eval(s.den(), c);
    if (sgn(d) == 0)
      throw Error(ErrorCode::DenominatorVanishes,
                  "coefficient of x^" + e.to_string() + " has a pole at the given point");
    r.add_term(e, eval(s.num(), c) / d);
  }
  return r;
}

/// Membership of a parameter polynomial in the ideal with lex Groebner
/// basis `qbasis`.
inline bool in_ideal(const AScalar& a, std::span<const AScalar> qbasis) {
  if (a.is_zero()) return true;
  if (qbasis.empty()) return false;
  return normal_form(a, qbasis, MonomialOrder::lex(a.nvars())).is_zero();
}

/// True iff the numerator of s lies in Q. Throws DenominatorInQ when the
/// denominator does (s is then not defined generically on V(Q)).
inline bool coeff_in_q(const ParamScalar& s, std::span<const AScalar> qbasis) {
  if (in_ideal(s.den(), qbasis))
    throw Error(ErrorCode::DenominatorInQ, "coefficient denominator lies in Q");
  return in_ideal(s.num(), qbasis);
}

/// Multiplies f by the lcm of its coefficient denominators, so every
/// coefficient becomes a polynomial. Returns the multiplier too.
inline std::pair<ParamPoly, AScalar> clear_denominators(const ParamPoly& f, std::size_t m) {
  AScalar l = ascalar::one(m);
  for (const auto& [e, c] : f.terms()) {
    if (c.has_unit_den()) continue;
    const AScalar g = ascalar::gcd(l, c.den());
    l = l * *ascalar::exact_divide(c.den(), g);
  }
  if (ascalar::is_constant(l)) return {f, l};
  return {f.scaled(ParamScalar(l)), l};
}

/// Flattens f in Q[a][x] (polynomial coefficients) to Q[x, a] with the
/// x-slots first. Coefficients must have constant denominators.
inline QPoly to_combined(const ParamPoly& f, std::size_t m) {
  const std::size_t n = f.nvars();
  QPoly r(n + m);
  for (const auto& [e, c] : f.terms()) {
    if (!c.has_unit_den())
      throw Error(ErrorCode::InvalidArgument, "to_combined needs polynomial coefficients");
    const Rational d = ascalar::constant_value(c.den());
    for (const auto& [ea, ca] : c.num().terms()) r.add_term(concat(e, ea), ca / d);
  }
  return r;
}

inline QPoly to_combined(const AScalar& a, std::size_t n) {
  QPoly r(n + a.nvars());
  for (const auto& [ea, ca] : a.terms()) r.add_term(concat(Exponent(n), ea), ca);
  return r;
}

/// Inverse of to_combined: collects the parameter part of each term into
/// the coefficient of its x-part.
inline ParamPoly from_combined(const QPoly& g, std::size_t n, std::size_t m) {
  if (g.nvars() != n + m) throw Error(ErrorCode::DimensionMismatch, "combined ring mismatch");
  std::map<Exponent, AScalar> acc;
  for (const auto& [e, c] : g.terms()) {
    auto [it, ins] = acc.try_emplace(e.slice(0, n), AScalar(m));
    it->second.add_term(e.slice(n, m), c);
  }
  ParamPoly r(n);
  for (auto& [e, a] : acc)
    if (!a.is_zero()) r.add_term(e, ParamScalar(std::move(a)));
  return r;
}

/// Pure-parameter element of the combined ring, as an AScalar.
inline AScalar param_part(const QPoly& g, std::size_t n, std::size_t m) {
  AScalar r(m);
  for (const auto& [e, c] : g.terms()) {
    if (!e.slice(0, n).is_zero())
      throw Error(ErrorCode::InvalidArgument, "element involves main variables");
    r.add_term(e.slice(n, m), c);
  }
  return r;
}

}  // namespace parastd

#endif  // PARASTD_PARAM_POLY_HPP
