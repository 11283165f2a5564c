#ifndef PARASTD_HILBERT_HPP
#define PARASTD_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parastd/comprehensive.hpp"

namespace parastd {

namespace detail {

inline mpz_class binomial(std::int64_t top, std::size_t k) {
  if (top < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), k);
  return r;
}

// Monomials of degree <= r in n variables outside the cones of gens,
// by slicing on the last variable.
inline mpz_class hsf_sliced(const std::vector<Exponent>& gens, std::size_t n, std::int64_t r) {
  if (r < 0) return 0;
  for (const auto& g : gens)
    if (g.slice(0, n).is_zero()) return 0;
  if (gens.empty()) return binomial(r + static_cast<std::int64_t>(n), n);
  if (n == 0) return 1;
  mpz_class total = 0;
  for (std::int64_t k = 0; k <= r; ++k) {
    std::vector<Exponent> sub;
    for (const auto& g : gens)
      if (g[n - 1] <= k) sub.push_back(g.slice(0, n - 1));
    total += hsf_sliced(sub, n - 1, r - k);
  }
  return total;
}

}  // namespace detail

/// Number of exponents of total degree <= r outside the staircase.
/// Inclusion-exclusion over generator subsets; slicing above 12 generators.
inline mpz_class hsf(const Staircase& E, std::uint64_t r) {
  const std::size_t n = E.nvars();
  const auto& gens = E.generators();
  const auto rr = static_cast<std::int64_t>(r);
  if (gens.size() > 12) return detail::hsf_sliced(gens, n, rr);
  mpz_class total = detail::binomial(rr + static_cast<std::int64_t>(n), n);
  const std::size_t k = gens.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    Exponent l(n);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        l = bits ? lcm(l, gens[i]) : gens[i];
        ++bits;
      }
    const auto d = static_cast<std::int64_t>(l.degree());
    const mpz_class c = detail::binomial(rr - d + static_cast<std::int64_t>(n), n);
    if (bits % 2) total -= c;
    else total += c;
  }
  return total;
}

/// Polynomial in r with rational coefficients, lowest degree first.
struct RPoly {
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& r) const {
    Rational v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * r + coeffs[i];
    return v;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  std::string to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      const Rational& c = coeffs[i];
      if (sgn(c) == 0) continue;
      Rational a = abs(c);
      if (s.empty()) s += sgn(c) < 0 ? "-" : "";
      else s += sgn(c) < 0 ? " - " : " + ";
      const bool unit = a == 1;
      std::string num = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
      if (i == 0) s += a.get_str();
      else {
        if (!unit) s += num + "*";
        s += i == 1 ? "r" : "r^" + std::to_string(i);
      }
    }
    return s;
  }

  friend bool operator==(const RPoly&, const RPoly&) = default;
};

struct HilbertData {
  std::vector<mpz_class> values;  ///< HSF(0..r_max)
  RPoly polynomial;
  std::uint64_t r0 = 0;
};

/// Eventual polynomial of the Hilbert-Samuel function, fitted on the tail
/// of HSF(0..r_max). Needs r_max >= n + largest generator degree.
inline HilbertData hilbert_polynomial(const Staircase& E, std::uint64_t r_max) {
  const std::size_t n = E.nvars();
  std::uint64_t dmax = 0;
  for (const auto& g : E.generators()) dmax = std::max(dmax, g.degree());
  if (r_max < n + dmax)
    throw Error(ErrorCode::NoStabilization,
                "r_max must be at least " + std::to_string(n + dmax) + " for this staircase");
  HilbertData out;
  for (std::uint64_t r = 0; r <= r_max; ++r) out.values.push_back(hsf(E, r));

  // Newton interpolation through the last n+1 values.
  const std::size_t k = n + 1;
  const std::uint64_t start = r_max + 1 - k;
  std::vector<Rational> xs, dd;
  for (std::size_t i = 0; i < k; ++i) {
    xs.emplace_back(static_cast<long>(start + i));
    dd.emplace_back(out.values[start + i]);
  }
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    // poly = poly * (r - xs[i]) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] -= poly[t] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  out.polynomial.coeffs = std::move(poly);

  std::uint64_t r0 = r_max + 1;
  while (r0 > 0 && out.polynomial(Rational(static_cast<long>(r0 - 1))) == Rational(out.values[r0 - 1]))
    --r0;
  out.r0 = r0;
  if (r0 + k > r_max + 1) throw Error(ErrorCode::NoStabilization, "tail does not stabilize");
  return out;
}

/// Smallest r_max that hilbert_polynomial accepts, plus slack.
inline std::uint64_t default_r_max(const Staircase& E) {
  std::uint64_t dmax = 0;
  for (const auto& g : E.generators()) dmax = std::max(dmax, g.degree());
  return E.nvars() + dmax + 2;
}

/// Size of the staircase complement, or nullopt when it is infinite.
inline std::optional<mpz_class> milnor_number(const Staircase& E) {
  const std::size_t n = E.nvars();
  if (E.contains(Exponent(n))) return mpz_class(0);
  std::vector<std::optional<std::uint32_t>> pure(n);
  for (const auto& g : E.generators()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) {
        ++support;
        var = i;
      }
    if (support == 1) pure[var] = g[var];
  }
  std::uint64_t bound = 0;
  for (const auto& p : pure) {
    if (!p) return std::nullopt;
    bound += *p - 1;
  }
  return hsf(E, bound);
}

struct HilbertStratum {
  std::vector<Cell> cells;
  std::vector<Staircase> staircases;
  HilbertData data;
  std::optional<mpz_class> milnor;
};

/// Cells of the comprehensive partition grouped by local Hilbert
/// polynomial. Needs a degree-compatible local order.
inline std::vector<HilbertStratum> hilbert_partition(const std::vector<ParamPoly>& F,
                                                     const MonomialOrder& order,
                                                     std::size_t nparams,
                                                     std::size_t max_depth = 8) {
  if (!order.is_degree_compatible_local())
    throw Error(ErrorCode::InvalidArgument,
                "Hilbert-Samuel data needs a degree-compatible local order");
  const auto cr = comprehensive_basis(F, order, nparams, max_depth);
  std::vector<HilbertStratum> out;
  for (const auto& cb : cr.cells) {
    auto data = hilbert_polynomial(cb.staircase, default_r_max(cb.staircase));
    auto mu = milnor_number(cb.staircase);
    auto it = std::find_if(out.begin(), out.end(), [&](const HilbertStratum& s) {
      return s.data.polynomial == data.polynomial;
    });
    if (it == out.end()) {
      out.push_back({{cb.cell}, {cb.staircase}, std::move(data), std::move(mu)});
    } else {
      it->cells.push_back(cb.cell);
      if (std::find(it->staircases.begin(), it->staircases.end(), cb.staircase) == it->staircases.end())
        it->staircases.push_back(cb.staircase);
    }
  }
  return out;
}

}  // namespace parastd

#endif  // PARASTD_HILBERT_HPP
