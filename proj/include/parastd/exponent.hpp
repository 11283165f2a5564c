#ifndef PARASTD_EXPONENT_HPP
#define PARASTD_EXPONENT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "parastd/errors.hpp"

namespace parastd {

/// A lattice point of N^n, i.e. the exponent of a monomial x^alpha.
///
/// The natural ordering (`<=>`) is plain lexicographic on the entries and
/// is only used for container keys; monomial orders live in order.hpp.
class Exponent {
 public:
  using value_type = std::uint32_t;

  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<value_type> init) : e_(init) {}
  explicit Exponent(std::vector<value_type> v) : e_(std::move(v)) {}

  static Exponent unit(std::size_t n, std::size_t i) {
    Exponent e(n);
    e.e_[i] = 1;
    return e;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  std::span<const value_type> entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::uint64_t degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  bool is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
  }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const {
    check_same(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Exponent& operator+=(const Exponent& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }

  /// Requires `o.divides(*this)`.
  Exponent& operator-=(const Exponent& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i])
        throw Error(ErrorCode::InvalidArgument, "exponent subtraction underflow");
      e_[i] -= o.e_[i];
    }
    return *this;
  }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }

  friend Exponent lcm(const Exponent& a, const Exponent& b) {
    a.check_same(b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  friend Exponent gcd(const Exponent& a, const Exponent& b) {
    a.check_same(b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }
  /// True when the monomials share no variable.
  friend bool coprime(const Exponent& a, const Exponent& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  /// Concatenation, used to lay out (x, z, a) exponents in one vector.
  friend Exponent concat(const Exponent& a, const Exponent& b) {
    std::vector<value_type> v(a.e_);
    v.insert(v.end(), b.e_.begin(), b.e_.end());
    return Exponent(std::move(v));
  }
  Exponent slice(std::size_t from, std::size_t count) const {
    return Exponent(std::vector<value_type>(e_.begin() + from, e_.begin() + from + count));
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  void check_same(const Exponent& o) const {
    if (o.e_.size() != e_.size())
      throw Error(ErrorCode::DimensionMismatch, "exponent length mismatch");
  }

  std::vector<value_type> e_;
};

}  // namespace parastd

#endif  // PARASTD_EXPONENT_HPP
