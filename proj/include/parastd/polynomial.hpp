#ifndef PARASTD_POLYNOMIAL_HPP
#define PARASTD_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "parastd/errors.hpp"
#include "parastd/exponent.hpp"
#include "parastd/order.hpp"

namespace parastd {

using Rational = mpq_class;

/// Coefficient-field hooks used by the generic algorithms. A field type
/// specializes this with `is_zero` and `one_like` (a unit of the same
/// shape as a given element).
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational zero_like(const Rational&) { return Rational(0); }
};

template <class K>
struct Term {
  Exponent exp;
  K coeff;
};

/// Sparse polynomial in a fixed number of variables with coefficients in K.
/// Zero coefficients are never stored.
template <class K>
class Polynomial {
 public:
  using Traits = FieldTraits<K>;
  using TermMap = std::map<Exponent, K>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}

  static Polynomial monomial(std::size_t nvars, Exponent e, K c) {
    Polynomial p(nvars);
    p.add_term(std::move(e), std::move(c));
    return p;
  }
  static Polynomial constant(std::size_t nvars, K c) {
    return monomial(nvars, Exponent(nvars), std::move(c));
  }
  static Polynomial variable(std::size_t nvars, std::size_t i, K one) {
    return monomial(nvars, Exponent::unit(nvars, i), std::move(one));
  }

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Coefficient of x^e, or nullopt when absent.
  std::optional<K> coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void add_term(Exponent e, K c) {
    if (e.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "term exponent length does not match ring");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Low-level: insert a term known to be absent and nonzero.
  void emplace_unchecked(Exponent e, K c) { terms_.emplace(std::move(e), std::move(c)); }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& s) const {
    Polynomial r(n_);
    if (Traits::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  /// this * c * x^e
  Polynomial mul_term(const Exponent& e, const K& c) const {
    Polynomial r(n_);
    if (Traits::is_zero(c)) return r;
    for (const auto& [ea, ca] : terms_) r.add_term(ea + e, ca * c);
    return r;
  }

  /// this -= c * x^e * g, without building the product separately.
  void sub_mul_term(const Exponent& e, const K& c, const Polynomial& g) {
    check_same(g);
    for (const auto& [eg, cg] : g.terms_) add_term(eg + e, -(c * cg));
  }

  /// Order-maximal term. Throws on the zero polynomial.
  Term<K> leading(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }
  Exponent leading_exp(const MonomialOrder& order) const { return leading(order).exp; }

  /// Terms sorted descending under `order`.
  std::vector<Term<K>> sorted_terms(const MonomialOrder& order) const {
    std::vector<Term<K>> v;
    v.reserve(terms_.size());
    for (const auto& [e, c] : terms_) v.push_back({e, c});
    std::sort(v.begin(), v.end(),
              [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.exp, b.exp); });
    return v;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }
  std::uint64_t low_degree() const {
    if (terms_.empty()) return 0;
    std::uint64_t d = UINT64_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
    return d;
  }

  /// Homogeneous w.r.t. the standard grading of the first `slots`
  /// variables (all of them by default).
  bool is_homogeneous(std::optional<std::size_t> slots = std::nullopt) const {
    const std::size_t k = slots.value_or(n_);
    std::optional<std::uint64_t> deg;
    for (const auto& [e, c] : terms_) {
      std::uint64_t d = 0;
      for (std::size_t i = 0; i < k; ++i) d += e[i];
      if (deg && *deg != d) return false;
      deg = d;
    }
    return true;
  }

  /// Drops every term of total degree > d.
  Polynomial truncated(std::uint64_t d) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= d) r.terms_.emplace(e, c);
    return r;
  }

  /// h(f) = sum c_a x^a z^(d-|a|), z appended as the last variable.
  Polynomial homogenize() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "homogenize of zero polynomial");
    const std::uint64_t d = total_degree();
    Polynomial r(n_ + 1);
    for (const auto& [e, c] : terms_) {
      Exponent he(n_ + 1);
      for (std::size_t i = 0; i < n_; ++i) he[i] = e[i];
      he[n_] = static_cast<Exponent::value_type>(d - e.degree());
      r.terms_.emplace(std::move(he), c);
    }
    return r;
  }

  /// Substitutes 1 for the last variable.
  Polynomial dehomogenize() const {
    if (n_ == 0) throw Error(ErrorCode::DimensionMismatch, "dehomogenize needs a variable");
    Polynomial r(n_ - 1);
    for (const auto& [e, c] : terms_) r.add_term(e.slice(0, n_ - 1), c);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
    Polynomial<K2> r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Keeps the terms for which `pred(exp, coeff)` holds.
  template <class P>
  Polynomial filtered(P&& pred) const {
    Polynomial r(n_);
    for (const auto& [e, c] : terms_)
      if (pred(e, c)) r.terms_.emplace(e, c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }

 private:
  void check_same(const Polynomial& o) const {
    if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "polynomial ring mismatch");
  }

  std::size_t n_ = 0;
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;

/// Ring with variable count and a unit of the coefficient field, so
/// generic code can build monomials without knowing K's shape.
template <class K>
Polynomial<K> unit_like(const Polynomial<K>& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "unit_like of zero polynomial");
  return Polynomial<K>::constant(p.nvars(), FieldTraits<K>::one_like(p.terms().begin()->second));
}

inline Rational eval(const QPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.nvars())
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

}  // namespace parastd

#endif  // PARASTD_POLYNOMIAL_HPP
