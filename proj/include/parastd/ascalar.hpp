#ifndef PARASTD_ASCALAR_HPP
#define PARASTD_ASCALAR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parastd/polynomial.hpp"

/// Helpers for polynomials in the parameters only: exact division,
/// gcd, square-free splitting. An AScalar is a QPoly in m variables.
namespace parastd {

using AScalar = QPoly;

namespace ascalar {

inline bool is_constant(const AScalar& p) {
  return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.is_zero());
}

inline Rational constant_value(const AScalar& p) {
  return p.is_zero() ? Rational(0) : p.terms().begin()->second;
}

inline AScalar one(std::size_t m) { return AScalar::constant(m, Rational(1)); }

inline Term<Rational> lex_leading(const AScalar& p) {
  return p.leading(MonomialOrder::lex(p.nvars()));
}

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<AScalar> exact_divide(const AScalar& a, const AScalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero parameter polynomial");
  const auto lex = MonomialOrder::lex(a.nvars());
  const auto lb = b.leading(lex);
  AScalar q(a.nvars());
  AScalar r = a;
  while (!r.is_zero()) {
    const auto lr = r.leading(lex);
    if (!lb.exp.divides(lr.exp)) return std::nullopt;
    const Exponent e = lr.exp - lb.exp;
    const Rational c = lr.coeff / lb.coeff;
    q.add_term(e, c);
    r.sub_mul_term(e, c, b);
  }
  return q;
}

inline std::uint32_t degree_in(const AScalar& p, std::size_t v) {
  std::uint32_t d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

/// Coefficient of v^k, as a polynomial in the remaining variables.
inline AScalar coeff_in(const AScalar& p, std::size_t v, std::uint32_t k) {
  AScalar r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[v] == k) {
      Exponent f = e;
      f[v] = 0;
      r.emplace_unchecked(std::move(f), c);
    }
  return r;
}

inline AScalar derivative(const AScalar& p, std::size_t v) {
  AScalar r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[v] > 0) {
      Exponent f = e;
      f[v] -= 1;
      r.add_term(std::move(f), c * e[v]);
    }
  return r;
}

/// Variables occurring in p.
inline std::vector<std::size_t> support_vars(const AScalar& p) {
  std::vector<bool> seen(p.nvars(), false);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

/// Makes the lex-leading coefficient 1.
inline AScalar monic(const AScalar& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / lex_leading(p).coeff);
}

/// Common monomial factor of all terms.
inline Exponent monomial_content(const AScalar& p) {
  if (p.is_zero()) return Exponent(p.nvars());
  Exponent g = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) g = gcd(g, e);
  return g;
}

inline AScalar gcd(const AScalar& a, const AScalar& b);

namespace detail {

// Pseudo-remainder of a by b viewed as univariate in v.
inline AScalar pseudo_remainder(AScalar a, const AScalar& b, std::size_t v) {
  const std::uint32_t db = degree_in(b, v);
  const AScalar lb = coeff_in(b, v, db);
  while (!a.is_zero() && degree_in(a, v) >= db) {
    const std::uint32_t da = degree_in(a, v);
    const AScalar la = coeff_in(a, v, da);
    Exponent shift(a.nvars());
    shift[v] = da - db;
    a = lb * a - la * b.mul_term(shift, Rational(1));
  }
  return a;
}

// gcd of the coefficients of p viewed in v.
inline AScalar content_in(const AScalar& p, std::size_t v) {
  const std::uint32_t d = degree_in(p, v);
  AScalar g(p.nvars());
  for (std::uint32_t k = 0; k <= d; ++k) {
    AScalar c = coeff_in(p, v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd(g, c);
    if (is_constant(g)) break;
  }
  return g;
}

}  // namespace detail

/// Monic gcd over Q, by recursive primitive pseudo-remainder sequences.
inline AScalar gcd(const AScalar& a, const AScalar& b) {
  const std::size_t m = a.nvars();
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (is_constant(a) || is_constant(b)) return one(m);

  // Split off the common monomial factor first; it is cheap and frequent.
  const Exponent mg = gcd(monomial_content(a), monomial_content(b));
  AScalar x = a, y = b;
  if (!mg.is_zero()) {
    x = *exact_divide(a, AScalar::monomial(m, mg, Rational(1)));
    y = *exact_divide(b, AScalar::monomial(m, mg, Rational(1)));
  }
  const AScalar mono = AScalar::monomial(m, mg, Rational(1));
  if (is_constant(x) || is_constant(y)) return mono;

  auto vx = support_vars(x), vy = support_vars(y);
  std::size_t v = m;
  for (auto i : vx)
    if (std::find(vy.begin(), vy.end(), i) != vy.end()) {
      v = i;
      break;
    }
  // A common factor can only involve variables present in both.
  if (v == m) return mono;

  const AScalar cx = detail::content_in(x, v);
  const AScalar cy = detail::content_in(y, v);
  const AScalar c = gcd(cx, cy);
  AScalar p = *exact_divide(x, cx);
  AScalar q = *exact_divide(y, cy);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);
  while (!q.is_zero()) {
    AScalar r = detail::pseudo_remainder(p, q, v);
    p = std::move(q);
    if (r.is_zero()) {
      q = AScalar(m);
      break;
    }
    if (degree_in(r, v) == 0) {
      p = one(m);
      break;
    }
    q = *exact_divide(r, detail::content_in(r, v));
  }
  if (degree_in(p, v) > 0) p = *exact_divide(p, detail::content_in(p, v));
  return monic(mono * c * p);
}

/// Square-free factors (each with multiplicity >= 1), constants dropped.
/// Monomial factors split into single variables; remaining parts are
/// decomposed by Yun's algorithm in one variable at a time, so the output
/// factors are square-free but not necessarily irreducible.
inline std::vector<AScalar> squarefree_factors(const AScalar& p) {
  std::vector<AScalar> out;
  if (is_constant(p)) return out;
  const std::size_t m = p.nvars();
  const Exponent mono = monomial_content(p);
  for (std::size_t i = 0; i < m; ++i)
    if (mono[i]) out.push_back(AScalar::variable(m, i, Rational(1)));
  AScalar rest = *exact_divide(p, AScalar::monomial(m, mono, Rational(1)));
  rest = monic(rest);
  // Peel off square-free parts variable by variable.
  for (std::size_t v = 0; v < m && !is_constant(rest); ++v) {
    if (degree_in(rest, v) == 0) continue;
    const AScalar cont = detail::content_in(rest, v);
    AScalar prim = *exact_divide(rest, cont);
    rest = cont;
    // Yun on prim in v.
    AScalar d = derivative(prim, v);
    AScalar g = gcd(prim, d);
    AScalar b = *exact_divide(prim, g);
    AScalar c = *exact_divide(d, g);
    AScalar bd = c - derivative(b, v);
    while (!is_constant(b)) {
      AScalar a = gcd(b, bd);
      if (!is_constant(a)) out.push_back(monic(a));
      b = *exact_divide(b, a);
      c = *exact_divide(bd, a);
      bd = c - derivative(b, v);
    }
  }
  // Deduplicate.
  std::vector<AScalar> uniq;
  for (auto& f : out)
    if (std::find(uniq.begin(), uniq.end(), f) == uniq.end()) uniq.push_back(std::move(f));
  return uniq;
}

}  // namespace ascalar
}  // namespace parastd

#endif  // PARASTD_ASCALAR_HPP
