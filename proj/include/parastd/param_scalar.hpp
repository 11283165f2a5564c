#ifndef PARASTD_PARAM_SCALAR_HPP
#define PARASTD_PARAM_SCALAR_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "parastd/ascalar.hpp"

namespace parastd {

/// Element of Frac(Q[a1..am]) stored as num/den.
///
/// Every arithmetic result is normalized: the gcd of numerator and
/// denominator is cancelled and the denominator is made lex-monic, so equal
/// fractions usually have equal representations. Equality itself is decided
/// by cross-multiplication and does not rely on that.
class ParamScalar {
 public:
  ParamScalar() : num_(0), den_(ascalar::one(0)) {}
  explicit ParamScalar(AScalar num) : num_(std::move(num)), den_(ascalar::one(num_.nvars())) {}
  ParamScalar(AScalar num, AScalar den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "zero denominator");
    if (den_.nvars() != num_.nvars())
      throw Error(ErrorCode::DimensionMismatch, "numerator/denominator ring mismatch");
    normalize();
  }

  static ParamScalar constant(std::size_t m, const Rational& c) {
    return ParamScalar(AScalar::constant(m, c));
  }
  static ParamScalar parameter(std::size_t m, std::size_t i) {
    return ParamScalar(AScalar::variable(m, i, Rational(1)));
  }

  const AScalar& num() const noexcept { return num_; }
  const AScalar& den() const noexcept { return den_; }
  std::size_t nparams() const noexcept { return num_.nvars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool has_unit_den() const { return ascalar::is_constant(den_); }
  bool is_constant() const { return ascalar::is_constant(num_) && ascalar::is_constant(den_); }

  ParamScalar operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  ParamScalar& operator+=(const ParamScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    normalize();
    return *this;
  }
  ParamScalar& operator-=(const ParamScalar& o) { return *this += -o; }
  ParamScalar& operator*=(const ParamScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ParamScalar(AScalar(nparams()));
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  ParamScalar& operator/=(const ParamScalar& o) {
    if (o.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "division by zero scalar");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
  }
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Value at a rational parameter point.
  Rational evaluate(const std::vector<Rational>& point) const {
    const Rational d = eval(den_, point);
    if (sgn(d) == 0)
      throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at the given point");
    return eval(num_, point) / d;
  }

 private:
  void normalize() {
    const std::size_t m = num_.nvars();
    if (num_.is_zero()) {
      den_ = ascalar::one(m);
      return;
    }
    if (!ascalar::is_constant(den_)) {
      AScalar g = ascalar::gcd(num_, den_);
      if (!ascalar::is_constant(g)) {
        num_ = *ascalar::exact_divide(num_, g);
        den_ = *ascalar::exact_divide(den_, g);
      }
    }
    const Rational lc = ascalar::lex_leading(den_).coeff;
    if (lc != 1) {
      const Rational inv = Rational(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  AScalar num_;
  AScalar den_;
};

template <>
struct FieldTraits<ParamScalar> {
  static bool is_zero(const ParamScalar& c) { return c.is_zero(); }
  static ParamScalar one_like(const ParamScalar& c) {
    return ParamScalar::constant(c.nparams(), Rational(1));
  }
  static ParamScalar zero_like(const ParamScalar& c) {
    return ParamScalar(AScalar(c.nparams()));
  }
};

using ParamPoly = Polynomial<ParamScalar>;

}  // namespace parastd

#endif  // PARASTD_PARAM_SCALAR_HPP
