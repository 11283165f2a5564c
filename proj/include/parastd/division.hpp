#ifndef PARASTD_DIVISION_HPP
#define PARASTD_DIVISION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parastd/polynomial.hpp"

namespace parastd {

template <class K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
  /// Quotients were tracked for every reduction step.
  bool cofactor_ok = true;
  /// The loop stopped at the first exponent outside every divisor cone.
  bool truncated = false;
};

/// The partition Delta_1, ..., Delta_r, Delta-bar of N^n induced by an
/// ordered list of divisor exponents.
class Partition {
 public:
  explicit Partition(std::vector<Exponent> corners) : corners_(std::move(corners)) {}

  /// Index j with alpha in Delta_j, or nullopt for Delta-bar.
  std::optional<std::size_t> region(const Exponent& alpha) const {
    for (std::size_t j = 0; j < corners_.size(); ++j)
      if (corners_[j].divides(alpha)) return j;
    return std::nullopt;
  }
  const std::vector<Exponent>& corners() const noexcept { return corners_; }

 private:
  std::vector<Exponent> corners_;
};

namespace detail {

enum class DivisionMode { Full, Truncated };

template <class K>
DivisionResult<K> division_loop(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors,
                                const MonomialOrder& order, DivisionMode mode,
                                std::optional<std::uint64_t> degree_bound,
                                std::optional<std::size_t> step_limit) {
  std::vector<Exponent> lead_exp;
  std::vector<K> lead_coeff;
  for (const auto& g : divisors) {
    if (g.nvars() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "divisor ring mismatch");
    auto lt = g.leading(order);
    lead_exp.push_back(lt.exp);
    lead_coeff.push_back(lt.coeff);
  }
  const Partition partition(lead_exp);

  DivisionResult<K> out;
  out.quotients.assign(divisors.size(), Polynomial<K>(f.nvars()));
  out.remainder = Polynomial<K>(f.nvars());
  Polynomial<K> rest = degree_bound ? f.truncated(*degree_bound) : f;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (step_limit && ++steps > *step_limit)
      throw Error(ErrorCode::NonTerminatingOrder,
                  "division did not terminate within " + std::to_string(*step_limit) + " steps");
    const auto lt = rest.leading(order);
    const auto j = partition.region(lt.exp);
    if (!j) {
      if (mode == DivisionMode::Truncated) {
        out.remainder = std::move(rest);
        out.truncated = true;
        return out;
      }
      out.remainder.add_term(lt.exp, lt.coeff);
      rest.add_term(lt.exp, -lt.coeff);
      continue;
    }
    const Exponent shift = lt.exp - lead_exp[*j];
    const K c = lt.coeff / lead_coeff[*j];
    out.quotients[*j].add_term(shift, c);
    rest.sub_mul_term(shift, c, divisors[*j]);
    if (degree_bound) rest = rest.truncated(*degree_bound);
  }
  return out;
}

template <class K>
bool all_homogeneous(const Polynomial<K>& f, std::span<const Polynomial<K>> gs) {
  if (!f.is_homogeneous()) return false;
  for (const auto& g : gs)
    if (!g.is_homogeneous()) return false;
  return true;
}

template <class K>
void require_nonzero(std::span<const Polynomial<K>> gs) {
  for (const auto& g : gs)
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero divisor");
}

}  // namespace detail

/// Division with unique quotients and remainder: f = sum q_j g_j + R with
/// ND(q_j) + exp(g_j) inside Delta_j and ND(R) inside Delta-bar.
///
/// Requires a well order, or homogeneous input (where every iterate stays
/// in one finite degree slice).
template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors,
                         const MonomialOrder& order) {
  detail::require_nonzero(divisors);
  if (!order.is_global() && !detail::all_homogeneous(f, divisors))
    throw Error(ErrorCode::NonTerminatingOrder,
                "full division needs a well order or homogeneous input; use divide_truncated or "
                "divide_series");
  return detail::division_loop(f, divisors, order, detail::DivisionMode::Full, std::nullopt,
                               std::nullopt);
}

template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                         const MonomialOrder& order) {
  return divide(f, std::span<const Polynomial<K>>(divisors), order);
}

/// Truncated division: identical to `divide` when the remainder is zero,
/// otherwise stops at the first iterate whose leading exponent lies in no
/// divisor cone and returns that iterate as remainder. Quotients stay
/// polynomial for any order.
///
/// Under a non-well order the iterates can descend forever without
/// escaping the cones (x by x - x^2, for instance); `step_limit` turns that
/// into NonTerminatingOrder.
template <class K>
DivisionResult<K> divide_truncated(const Polynomial<K>& f,
                                   std::span<const Polynomial<K>> divisors,
                                   const MonomialOrder& order,
                                   std::size_t step_limit = 200000) {
  detail::require_nonzero(divisors);
  std::optional<std::size_t> limit;
  if (!order.is_global() && !detail::all_homogeneous(f, divisors)) limit = step_limit;
  return detail::division_loop(f, divisors, order, detail::DivisionMode::Truncated, std::nullopt,
                               limit);
}

template <class K>
DivisionResult<K> divide_truncated(const Polynomial<K>& f,
                                   const std::vector<Polynomial<K>>& divisors,
                                   const MonomialOrder& order) {
  return divide_truncated(f, std::span<const Polynomial<K>>(divisors), order);
}

/// Full division with every iterate cut at total degree `degree`: the
/// finite stand-in for power-series division under local orders. For
/// degree-compatible local orders the result is the exact degree <= d part
/// of the series quotients and remainder.
template <class K>
DivisionResult<K> divide_series(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors,
                                const MonomialOrder& order, std::uint64_t degree) {
  detail::require_nonzero(divisors);
  return detail::division_loop(f, divisors, order, detail::DivisionMode::Full, degree,
                               std::nullopt);
}

template <class K>
DivisionResult<K> divide_series(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                                const MonomialOrder& order, std::uint64_t degree) {
  return divide_series(f, std::span<const Polynomial<K>>(divisors), order, degree);
}

/// S(f, g) = lc(g) m f - lc(f) m' g with m = lcm / lt(f), m' = lcm / lt(g).
template <class K>
Polynomial<K> s_function(const Polynomial<K>& f, const Polynomial<K>& g,
                         const MonomialOrder& order) {
  const auto lf = f.leading(order);
  const auto lg = g.leading(order);
  const Exponent l = lcm(lf.exp, lg.exp);
  Polynomial<K> s = f.mul_term(l - lf.exp, lg.coeff);
  s.sub_mul_term(l - lg.exp, lf.coeff, g);
  return s;
}

/// Remainder of full division (well orders), a normal form of f.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                          const MonomialOrder& order) {
  if (basis.empty()) return f;
  return divide(f, basis, order).remainder;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order) {
  return normal_form(f, std::span<const Polynomial<K>>(basis), order);
}

}  // namespace parastd

#endif  // PARASTD_DIVISION_HPP
