#ifndef PARASTD_BUCHBERGER_HPP
#define PARASTD_BUCHBERGER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "parastd/division.hpp"
#include "parastd/param_scalar.hpp"

namespace parastd {

template <class K>
struct BasisResult {
  std::vector<Polynomial<K>> generators;
  /// cofactors[i][j]: coefficient of input j in generators[i]. Empty when
  /// cofactor tracking was disabled.
  std::vector<std::vector<Polynomial<K>>> cofactors;
  std::vector<Polynomial<K>> inputs;
  MonomialOrder order;
  bool homogeneous = false;

  bool has_cofactors() const { return cofactors.size() == generators.size(); }
};

struct BuchbergerOptions {
  bool use_truncated = false;
  bool track_cofactors = true;
};

/// Scalar that clears denominators and rational content of p, so repeated
/// S-pair reductions do not blow up coefficient sizes.
inline Rational content_normalizer(const QPoly& p) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

inline ParamScalar content_normalizer(const ParamPoly& p) {
  if (p.is_zero()) return ParamScalar();
  const std::size_t m = p.terms().begin()->second.nparams();
  AScalar dens = ascalar::one(m);
  for (const auto& [e, c] : p.terms()) {
    if (c.has_unit_den()) continue;
    const AScalar g = ascalar::gcd(dens, c.den());
    dens = dens * *ascalar::exact_divide(c.den(), g);
  }
  // Rational content of the cleared numerators.
  ParamScalar scale(dens);
  Rational rc = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const ParamScalar v = c * scale;
    for (const auto& [ea, ca] : v.num().terms()) {
      if (first) {
        rc = abs(ca);
        first = false;
      } else {
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), rc.get_num_mpz_t(), ca.get_num_mpz_t());
        mpz_lcm(d.get_mpz_t(), rc.get_den_mpz_t(), ca.get_den_mpz_t());
        rc = Rational(n, d);
        rc.canonicalize();
      }
    }
  }
  if (sgn(rc) == 0) return scale;
  return scale * ParamScalar::constant(m, Rational(1) / rc);
}

namespace detail {

template <class K>
bool all_homogeneous(std::span<const Polynomial<K>> fs) {
  for (const auto& f : fs)
    if (!f.is_zero() && !f.is_homogeneous()) return false;
  return true;
}

struct PairKey {
  std::size_t i, j;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion and the chain criterion. Requires a well order, or
/// homogeneous input (each degree slice is finite).
template <class K>
BasisResult<K> buchberger(const std::vector<Polynomial<K>>& input, const MonomialOrder& order,
                          BuchbergerOptions opts = {}) {
  const std::span<const Polynomial<K>> in(input);
  if (input.empty() || std::all_of(input.begin(), input.end(), [](auto& f) { return f.is_zero(); }))
    throw Error(ErrorCode::ZeroPolynomial, "buchberger needs a nonzero generator");
  const bool homogeneous = detail::all_homogeneous(in);
  if (!order.is_global() && !homogeneous)
    throw Error(ErrorCode::NonTerminatingOrder,
                "basis computation needs a well order or homogeneous generators");
  const std::size_t nv = input.front().nvars();

  BasisResult<K> out;
  out.inputs = input;
  out.order = order;
  auto& G = out.generators;
  auto& C = out.cofactors;
  std::vector<Exponent> lead;

  const auto zero = Polynomial<K>(nv);
  auto add = [&](Polynomial<K> g, std::vector<Polynomial<K>> cof) {
    const auto s = content_normalizer(g);
    g = g.scaled(s);
    if (opts.track_cofactors)
      for (auto& c : cof) c = c.scaled(s);
    lead.push_back(g.leading_exp(order));
    G.push_back(std::move(g));
    if (opts.track_cofactors) C.push_back(std::move(cof));
  };

  for (std::size_t k = 0; k < input.size(); ++k) {
    if (input[k].is_zero()) continue;
    std::vector<Polynomial<K>> cof;
    if (opts.track_cofactors) {
      cof.assign(input.size(), zero);
      cof[k] = unit_like(input[k]);
    }
    add(input[k], std::move(cof));
  }

  std::set<detail::PairKey> pending;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const detail::PairKey& p) { return lcm(lead[p.i], lead[p.j]); };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first; ties by index for determinism.
    auto best = pending.begin();
    Exponent best_l = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = pair_lcm(*it);
      if (order.less(l, best_l)) {
        best = it;
        best_l = std::move(l);
      }
    }
    const detail::PairKey p = *best;
    pending.erase(best);

    if (coprime(lead[p.i], lead[p.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (lead[k].divides(best_l) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    const auto li = G[p.i].leading(order);
    const auto lj = G[p.j].leading(order);
    Polynomial<K> s = s_function(G[p.i], G[p.j], order);
    std::vector<Polynomial<K>> cof;
    if (opts.track_cofactors) {
      cof.resize(input.size(), zero);
      for (std::size_t t = 0; t < input.size(); ++t) {
        cof[t] = C[p.i][t].mul_term(best_l - li.exp, lj.coeff);
        cof[t].sub_mul_term(best_l - lj.exp, li.coeff, C[p.j][t]);
      }
    }
    if (s.is_zero()) continue;
    const auto div = opts.use_truncated ? divide_truncated(s, std::span<const Polynomial<K>>(G), order)
                                        : divide(s, std::span<const Polynomial<K>>(G), order);
    if (div.remainder.is_zero()) continue;
    if (opts.track_cofactors)
      for (std::size_t k = 0; k < G.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (std::size_t t = 0; t < input.size(); ++t)
          cof[t] -= div.quotients[k] * C[k][t];
      }
    const std::size_t idx = G.size();
    add(div.remainder, std::move(cof));
    for (std::size_t i = 0; i < idx; ++i) pending.insert({i, idx});
  }
  out.homogeneous = homogeneous;
  for (const auto& g : G)
    if (!g.is_homogeneous()) out.homogeneous = false;
  return out;
}

/// Drops generators whose leading exponent lies in another generator's
/// cone (the earlier one wins on equal exponents).
template <class K>
BasisResult<K> minimalize(const BasisResult<K>& b) {
  BasisResult<K> out;
  out.inputs = b.inputs;
  out.order = b.order;
  out.homogeneous = b.homogeneous;
  std::vector<Exponent> lead;
  for (const auto& g : b.generators) lead.push_back(g.leading_exp(b.order));
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < b.generators.size() && !redundant; ++k) {
      if (k == i || !lead[k].divides(lead[i])) continue;
      if (lead[k] != lead[i] || k < i) redundant = true;
    }
    if (redundant) continue;
    out.generators.push_back(b.generators[i]);
    if (b.has_cofactors()) out.cofactors.push_back(b.cofactors[i]);
  }
  return out;
}

/// Reduced basis: minimal, monic, and every non-leading exponent outside
/// the staircase. Generators come out sorted ascending by leading exponent.
template <class K>
BasisResult<K> reduce_basis(const BasisResult<K>& b, const MonomialOrder& order) {
  BasisResult<K> m = minimalize(b);
  const std::span<const Polynomial<K>> G0(m.generators);
  BasisResult<K> out;
  out.inputs = m.inputs;
  out.order = order;
  out.homogeneous = m.homogeneous;

  std::vector<std::pair<Polynomial<K>, std::vector<Polynomial<K>>>> items;
  for (std::size_t j = 0; j < m.generators.size(); ++j) {
    const auto& g = m.generators[j];
    const auto lt = g.leading(order);
    Polynomial<K> tail = g;
    tail.add_term(lt.exp, -lt.coeff);
    const auto div = divide(tail, G0, order);
    Polynomial<K> red = div.remainder;
    red.add_term(lt.exp, lt.coeff);
    const K inv = FieldTraits<K>::one_like(lt.coeff) / lt.coeff;
    red = red.scaled(inv);
    std::vector<Polynomial<K>> cof;
    if (m.has_cofactors()) {
      cof = m.cofactors[j];
      for (std::size_t k = 0; k < G0.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        for (std::size_t t = 0; t < cof.size(); ++t) cof[t] -= div.quotients[k] * m.cofactors[k][t];
      }
      for (auto& c : cof) c = c.scaled(inv);
    }
    items.emplace_back(std::move(red), std::move(cof));
  }
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b2) {
    return order.less(a.first.leading_exp(order), b2.first.leading_exp(order));
  });
  for (auto& [g, c] : items) {
    out.generators.push_back(std::move(g));
    if (m.has_cofactors()) out.cofactors.push_back(std::move(c));
  }
  return out;
}

/// Every S-function of two generators divides to zero.
template <class K>
bool satisfies_s_criterion(const std::vector<Polynomial<K>>& G, const MonomialOrder& order) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const auto s = s_function(G[i], G[j], order);
      if (s.is_zero()) continue;
      if (!divide(s, G, order).remainder.is_zero()) return false;
    }
  return true;
}

/// Each generator equals sum_j cofactor_j * input_j exactly.
template <class K>
bool cofactors_certified(const BasisResult<K>& b) {
  if (!b.has_cofactors()) return false;
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    Polynomial<K> acc(b.generators[i].nvars());
    for (std::size_t t = 0; t < b.inputs.size(); ++t) acc += b.cofactors[i][t] * b.inputs[t];
    if (!(acc == b.generators[i])) return false;
  }
  return true;
}

}  // namespace parastd

#endif  // PARASTD_BUCHBERGER_HPP
