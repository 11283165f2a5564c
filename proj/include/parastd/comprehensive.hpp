#ifndef PARASTD_COMPREHENSIVE_HPP
#define PARASTD_COMPREHENSIVE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "parastd/genstd.hpp"

namespace parastd {

/// Locally closed set V(E) \ V(prod N) of parameter space.
struct Cell {
  std::vector<AScalar> vanish;
  std::vector<AScalar> nonvanish;

  bool contains(const ParamPoint& c) const {
    for (const auto& e : vanish)
      if (sgn(eval(e, c)) != 0) return false;
    for (const auto& n : nonvanish)
      if (sgn(eval(n, c)) == 0) return false;
    return true;
  }
};

struct CellBasis {
  Cell cell;
  GenericBasis basis;
  Staircase staircase;
};

struct ComprehensiveResult {
  std::vector<CellBasis> cells;
  std::size_t nparams = 0;
  /// Every branch was resolved before the depth limit.
  bool covering = true;
};

namespace detail {

inline AScalar extend_params(const AScalar& a, std::size_t extra) {
  AScalar r(a.nvars() + extra);
  for (const auto& [e, c] : a.terms()) r.add_term(concat(e, Exponent(extra)), c);
  return r;
}

}  // namespace detail

/// False when no point (over the algebraic closure) has every E vanishing
/// and every N nonzero: 1 in <E, 1 - t * prod N>.
inline bool cell_nonempty(const std::vector<AScalar>& E, const std::vector<AScalar>& N,
                          std::size_t m) {
  std::vector<QPoly> gens;
  for (const auto& e : E)
    if (!e.is_zero()) gens.push_back(detail::extend_params(e, 1));
  AScalar prod = ascalar::one(m);
  for (const auto& n : N) prod = prod * n;
  if (prod.is_zero()) return false;
  QPoly rab = QPoly::constant(m + 1, Rational(1)) -
              detail::extend_params(prod, 1) * QPoly::variable(m + 1, m, Rational(1));
  gens.push_back(std::move(rab));
  const auto order = MonomialOrder::grevlex(m + 1);
  const auto b = buchberger(gens, order, {.track_cofactors = false});
  for (const auto& g : b.generators)
    if (g.leading_exp(order).is_zero()) return false;
  return true;
}

namespace detail {

inline void comprehensive_step(const std::vector<ParamPoly>& F, const MonomialOrder& order,
                               std::size_t m, std::vector<AScalar> E, std::vector<AScalar> N,
                               std::size_t depth, std::size_t max_depth, ComprehensiveResult& out) {
  if (!cell_nonempty(E, N, m)) return;
  if (depth > max_depth)
    throw Error(ErrorCode::DepthExceeded,
                "branching deeper than " + std::to_string(max_depth) + " levels");
  PrimeContext ctx;
  try {
    ctx = PrimeContext(m, E, false);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QContainsOne) return;
    throw;
  }
  GenericBasis B = generic_basis(F, order, ctx);
  std::vector<AScalar> factors;
  for (auto& f : B.h_factors())
    if (!ctx.contains(f)) factors.push_back(std::move(f));

  std::vector<AScalar> open = N;
  open.insert(open.end(), factors.begin(), factors.end());
  if (cell_nonempty(E, open, m)) {
    Staircase s = B.staircase;
    out.cells.push_back({Cell{E, open}, std::move(B), std::move(s)});
  }
  // V(E) cap V(h) split disjointly: h_i vanishes, h_1..h_{i-1} do not.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto E2 = E;
    E2.push_back(factors[i]);
    auto N2 = N;
    N2.insert(N2.end(), factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(i));
    comprehensive_step(F, order, m, std::move(E2), std::move(N2), depth + 1, max_depth, out);
  }
}

}  // namespace detail

/// Partition of parameter space into cells, each carrying a generic
/// standard basis whose staircase holds at every point of the cell.
inline ComprehensiveResult comprehensive_basis(const std::vector<ParamPoly>& F,
                                               const MonomialOrder& order, std::size_t nparams,
                                               std::size_t max_depth = 8) {
  if (F.empty()) throw Error(ErrorCode::ZeroPolynomial, "empty input");
  ComprehensiveResult out;
  out.nparams = nparams;
  detail::comprehensive_step(F, order, nparams, {}, {}, 0, max_depth, out);
  return out;
}

/// Index of the cell containing c.
inline std::size_t locate(const ComprehensiveResult& r, const ParamPoint& c) {
  if (c.size() != r.nparams) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    if (!r.cells[i].cell.contains(c)) continue;
    if (found) throw Error(ErrorCode::MultipleCells, "point lies in several cells");
    found = i;
  }
  if (!found) throw Error(ErrorCode::NoCell, "point lies in no cell");
  return *found;
}

}  // namespace parastd

#endif  // PARASTD_COMPREHENSIVE_HPP
