#ifndef PARASTD_GENSTD_HPP
#define PARASTD_GENSTD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parastd/buchberger.hpp"
#include "parastd/param_poly.hpp"
#include "parastd/staircase.hpp"

namespace parastd {

/// The ideal Q of the parameter ring on whose zero set V(Q) a generic basis
/// is valid. Primality is a caller contract; only membership is computed.
class PrimeContext {
 public:
  PrimeContext() = default;

  /// Q = <generators>. Throws QContainsOne for the unit ideal.
  PrimeContext(std::size_t nparams, std::vector<AScalar> generators, bool assumed_prime = true)
      : m_(nparams), gens_(std::move(generators)), assumed_prime_(assumed_prime) {
    std::vector<AScalar> nz;
    for (const auto& g : gens_) {
      if (g.nvars() != m_) throw Error(ErrorCode::DimensionMismatch, "Q generator ring mismatch");
      if (!g.is_zero()) nz.push_back(g);
    }
    if (nz.empty()) return;
    const auto lex = MonomialOrder::lex(m_);
    const auto b = reduce_basis(buchberger(nz, lex, {.track_cofactors = false}), lex);
    basis_ = b.generators;
    for (const auto& g : basis_)
      if (ascalar::is_constant(g)) throw Error(ErrorCode::QContainsOne, "1 lies in Q");
  }

  static PrimeContext zero(std::size_t nparams) { return PrimeContext(nparams, {}); }

  std::size_t nparams() const noexcept { return m_; }
  const std::vector<AScalar>& generators() const noexcept { return gens_; }
  /// Reduced lex Groebner basis of Q.
  const std::vector<AScalar>& basis() const noexcept { return basis_; }
  bool assumed_prime() const noexcept { return assumed_prime_; }
  bool is_zero_ideal() const noexcept { return basis_.empty(); }

  bool contains(const AScalar& a) const { return in_ideal(a, basis_); }

  /// Normal form modulo Q.
  AScalar reduce(const AScalar& a) const {
    if (basis_.empty() || a.is_zero()) return a;
    return normal_form(a, basis_, MonomialOrder::lex(m_));
  }

  /// Numerator in Q; throws DenominatorInQ when the denominator is.
  bool coeff_in_q(const ParamScalar& s) const { return parastd::coeff_in_q(s, basis_); }

  /// True when every Q generator vanishes at c.
  bool vanishes_at(const ParamPoint& c) const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [&](const AScalar& g) { return sgn(eval(g, c)) == 0; });
  }

 private:
  std::size_t m_ = 0;
  std::vector<AScalar> gens_;
  std::vector<AScalar> basis_;
  bool assumed_prime_ = true;
};

/// A generic standard basis (gens, h) on V(Q): at every point of V(Q)
/// off V(h) the specialized gens form a standard basis of the specialized
/// ideal, with staircase `staircase`.
struct GenericBasis {
  std::vector<ParamPoly> gens;
  /// h as a product of monic factors (lc numerators, cleared input
  /// denominators and, for homogenized runs, top-degree coefficients).
  std::vector<AScalar> h_parts;
  PrimeContext ctx;
  Staircase staircase;
  MonomialOrder order;
  std::vector<ParamPoly> inputs;
  /// cofactors[i][j]: gens[i] = sum_j cofactors[i][j] * inputs[j]; empty
  /// once the basis has been reduced (reduction works modulo Q).
  std::vector<std::vector<ParamPoly>> cofactors;
  bool reduced = false;
  std::optional<std::uint64_t> trunc_degree;

  std::size_t nparams() const noexcept { return ctx.nparams(); }

  AScalar h() const {
    AScalar p = ascalar::one(ctx.nparams());
    for (const auto& f : h_parts) p = p * f;
    return p;
  }

  /// Distinct square-free factors of h, sorted, for branching.
  std::vector<AScalar> h_factors() const {
    std::vector<AScalar> out;
    for (const auto& part : h_parts)
      for (auto& f : ascalar::squarefree_factors(part))
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
    const auto lex = MonomialOrder::lex(ctx.nparams());
    std::sort(out.begin(), out.end(), [&](const AScalar& a, const AScalar& b) {
      const auto ta = a.sorted_terms(lex), tb = b.sorted_terms(lex);
      for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        auto c = lex.compare(ta[i].exp, tb[i].exp);
        if (c != 0) return c < 0;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
      }
      return ta.size() < tb.size();
    });
    return out;
  }
};

/// Leading term modulo Q: the order-maximal term whose coefficient
/// numerator is not in Q.
inline Term<ParamScalar> leading_mod_q(const ParamPoly& f, const MonomialOrder& order,
                                       const PrimeContext& ctx) {
  std::optional<Term<ParamScalar>> best;
  for (const auto& [e, c] : f.terms()) {
    if (ctx.coeff_in_q(c)) continue;
    if (!best || order.greater(e, best->exp)) best = Term<ParamScalar>{e, c};
  }
  if (!best) throw Error(ErrorCode::AllCoefficientsInQ, "every coefficient lies in Q");
  return *best;
}

/// f = g1 - g2 with g2 collecting the terms whose numerators lie in Q.
inline std::pair<ParamPoly, ParamPoly> split_mod_q(const ParamPoly& f, const PrimeContext& ctx) {
  ParamPoly g1(f.nvars()), g2(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (ctx.coeff_in_q(c))
      g2.add_term(e, -c);
    else
      g1.add_term(e, c);
  }
  return {g1, g2};
}

/// Reduces every coefficient numerator modulo Q, dropping vanishing terms.
inline ParamPoly reduce_mod_q(const ParamPoly& f, const PrimeContext& ctx) {
  if (ctx.is_zero_ideal()) return f;
  ParamPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    AScalar n = ctx.reduce(c.num());
    if (!n.is_zero()) r.add_term(e, ParamScalar(std::move(n), c.den()));
  }
  return r;
}

struct ModQDivision {
  std::vector<ParamPoly> quotients;
  ParamPoly remainder;
  /// sum_j q_j g_j^(2); every coefficient numerator lies in Q.
  ParamPoly t;
};

/// Division modulo Q: f = sum q_j g_j + R + T. The divisors' Q-parts are
/// split off and f is divided by the rest; T collects q_j * (Q-part).
/// Full division under well orders or homogeneous input, otherwise the
/// degree-`trunc_degree` series surrogate.
inline ModQDivision divide_mod_q(const ParamPoly& f, const std::vector<ParamPoly>& G,
                                 const MonomialOrder& order, const PrimeContext& ctx,
                                 std::optional<std::uint64_t> trunc_degree,
                                 const std::optional<AScalar>& h = std::nullopt) {
  std::vector<ParamPoly> g1s, g2s;
  for (const auto& g : G) {
    auto [g1, g2] = split_mod_q(g, ctx);
    if (g1.is_zero()) throw Error(ErrorCode::AllCoefficientsInQ, "divisor lies in Q[x]");
    if (h) {
      const auto lc = g1.leading(order).coeff;
      if (!ascalar::exact_divide(*h, lc.num()))
        throw Error(ErrorCode::LeadingCoeffNotDividingH, "leading coefficient mod Q does not divide h");
    }
    g1s.push_back(std::move(g1));
    g2s.push_back(std::move(g2));
  }
  DivisionResult<ParamScalar> d;
  bool homogeneous = f.is_homogeneous();
  for (const auto& g : g1s) homogeneous = homogeneous && g.is_homogeneous();
  if (order.is_global() || homogeneous) {
    d = divide(f, g1s, order);
  } else {
    if (!trunc_degree)
      throw Error(ErrorCode::InvalidArgument, "a truncation degree is needed for this order");
    d = divide_series(f, g1s, order, *trunc_degree);
  }
  ModQDivision out;
  out.t = ParamPoly(f.nvars());
  for (std::size_t j = 0; j < G.size(); ++j) out.t += d.quotients[j] * g2s[j];
  out.quotients = std::move(d.quotients);
  out.remainder = std::move(d.remainder);
  return out;
}

namespace detail {

inline AScalar monic_numerator(const ParamScalar& c) { return ascalar::monic(c.num()); }

// Factors are stored reduced modulo Q: only their values on V(Q) matter.
inline void add_h_part(std::vector<AScalar>& parts, const AScalar& raw, const PrimeContext& ctx) {
  const AScalar a = ctx.reduce(raw);
  if (a.is_zero() || ascalar::is_constant(a)) return;
  AScalar m = ascalar::monic(a);
  if (std::find(parts.begin(), parts.end(), m) == parts.end()) parts.push_back(std::move(m));
}

// Shared body of the well-order and homogenized constructions.
inline GenericBasis build_generic_basis(const std::vector<ParamPoly>& F,
                                        const MonomialOrder& order, const PrimeContext& ctx,
                                        bool homogenize) {
  const std::size_t n = order.nvars();
  const std::size_t m = ctx.nparams();
  GenericBasis out;
  out.ctx = ctx;
  out.order = order;
  out.inputs = F;
  out.staircase = Staircase(n);

  // Inputs with polynomial coefficients; the multipliers join h.
  std::vector<ParamPoly> cleared;
  std::vector<AScalar> multipliers;
  std::vector<std::size_t> source;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (F[j].nvars() != n) throw Error(ErrorCode::DimensionMismatch, "input ring mismatch");
    if (F[j].is_zero()) continue;
    for (const auto& [e, c] : F[j].terms())
      if (c.nparams() != m) throw Error(ErrorCode::DimensionMismatch, "parameter count mismatch");
    auto [f, l] = clear_denominators(F[j], m);
    if (ctx.contains(l)) throw Error(ErrorCode::DenominatorInQ, "input denominator lies in Q");
    add_h_part(out.h_parts, l, ctx);
    cleared.push_back(std::move(f));
    multipliers.push_back(std::move(l));
    source.push_back(j);
  }
  if (cleared.empty()) return out;

  const CompositeOrder composite{order, m,
                                 homogenize ? CompositeVariant::Homogenized : CompositeVariant::Block};
  const std::size_t slots = composite.main_slots();
  const MonomialOrder engine_order = composite.as_matrix();

  std::vector<QPoly> engine_in;
  for (const auto& f : cleared) engine_in.push_back(to_combined(homogenize ? f.homogenize() : f, m));
  for (const auto& q : ctx.generators())
    if (!q.is_zero()) engine_in.push_back(to_combined(q, slots));

  if (homogenize) {
    // Top-degree coefficients: off their zero set, specializing commutes
    // with homogenizing.
    for (const auto& f : cleared) {
      const auto d = f.total_degree();
      AScalar prod = ascalar::one(m);
      for (const auto& [e, c] : f.terms())
        if (e.degree() == d && !ctx.contains(c.num())) prod = prod * c.num();
      add_h_part(out.h_parts, prod, ctx);
    }
  }

  const auto basis = reduce_basis(buchberger(engine_in, engine_order), engine_order);

  for (std::size_t i = 0; i < basis.generators.size(); ++i) {
    const ParamPoly g = from_combined(basis.generators[i], slots, m);
    bool in_q = true;
    for (const auto& [e, c] : g.terms())
      if (!ctx.contains(c.num())) {
        in_q = false;
        break;
      }
    if (in_q) continue;

    // Rewrite in terms of the inputs only: g' = sum_j u_j f_j differs from g
    // by an element of Q[x].
    ParamPoly rewritten(n);
    std::vector<ParamPoly> cof(F.size(), ParamPoly(n));
    for (std::size_t k = 0; k < cleared.size(); ++k) {
      ParamPoly u = from_combined(basis.cofactors[i][k], slots, m);
      if (homogenize) u = u.dehomogenize();
      if (u.is_zero()) continue;
      rewritten += u * cleared[k];
      cof[source[k]] = u.scaled(ParamScalar(multipliers[k]));
    }
    const auto lt = leading_mod_q(rewritten, order, ctx);
    add_h_part(out.h_parts, lt.coeff.num(), ctx);
    out.staircase.insert(lt.exp);
    out.gens.push_back(std::move(rewritten));
    out.cofactors.push_back(std::move(cof));
  }
  return out;
}

}  // namespace detail

/// Generic standard basis for a well order: Groebner basis of <F> + <Q>
/// under the block order (x first, parameters lex), elements of Q dropped,
/// survivors rewritten into <F> through their cofactors.
inline GenericBasis generic_basis_well_order(const std::vector<ParamPoly>& F,
                                             const MonomialOrder& order,
                                             const PrimeContext& ctx) {
  if (!order.is_global())
    throw Error(ErrorCode::NonTerminatingOrder, "generic_basis_well_order needs a global order");
  return detail::build_generic_basis(F, order, ctx, false);
}

/// Generic standard basis for a local or mixed order, via Lazard
/// homogenization: homogeneous basis of <h(F)> + <Q> under the homogenized
/// composite order, then z = 1.
inline GenericBasis generic_basis_local(const std::vector<ParamPoly>& F, const MonomialOrder& order,
                                        const PrimeContext& ctx) {
  return detail::build_generic_basis(F, order, ctx, true);
}

/// Dispatches on the order kind.
inline GenericBasis generic_basis(const std::vector<ParamPoly>& F, const MonomialOrder& order,
                                  const PrimeContext& ctx) {
  return order.is_global() ? generic_basis_well_order(F, order, ctx)
                           : generic_basis_local(F, order, ctx);
}

/// Generic reduced standard basis. Exact for global orders; for other
/// orders the (generally infinite) series is cut at total degree
/// `trunc_degree`. Coefficient numerators are reduced modulo Q.
inline GenericBasis generic_reduced_basis(const GenericBasis& B, std::uint64_t trunc_degree) {
  const bool exact = B.order.is_global();
  if (!exact)
    for (const auto& e : B.staircase.generators())
      if (e.degree() > trunc_degree)
        throw Error(ErrorCode::TruncationTooSmall,
                    "truncation degree below a staircase corner degree");

  // One monic generator per staircase corner.
  std::vector<ParamPoly> minimal;
  for (const auto& corner : B.staircase.generators()) {
    for (const auto& g : B.gens) {
      const auto lt = leading_mod_q(g, B.order, B.ctx);
      if (lt.exp != corner) continue;
      minimal.push_back(g.scaled(FieldTraits<ParamScalar>::one_like(lt.coeff) / lt.coeff));
      break;
    }
  }

  GenericBasis out = B;
  out.gens.clear();
  out.cofactors.clear();
  out.reduced = true;
  out.trunc_degree = exact ? std::nullopt : std::optional<std::uint64_t>(trunc_degree);
  for (const auto& g : minimal) {
    const auto lt = leading_mod_q(g, B.order, B.ctx);
    ParamPoly tail = g;
    tail.add_term(lt.exp, -lt.coeff);
    ParamPoly red(g.nvars());
    if (!tail.is_zero()) {
      const auto d = divide_mod_q(tail, minimal, B.order, B.ctx,
                                  exact ? std::nullopt : std::optional<std::uint64_t>(trunc_degree));
      red = reduce_mod_q(d.remainder, B.ctx);
    }
    red.add_term(lt.exp, lt.coeff);
    if (!exact) red = red.truncated(trunc_degree);
    out.gens.push_back(std::move(red));
  }
  return out;
}

/// Exponents of a plain (parameter-free) ideal's standard basis, computed
/// from scratch: Buchberger for well orders, Lazard homogenization for the
/// rest.
inline Staircase plain_staircase(const std::vector<QPoly>& F, const MonomialOrder& order) {
  const std::size_t n = order.nvars();
  Staircase s(n);
  std::vector<QPoly> in;
  for (const auto& f : F)
    if (!f.is_zero()) in.push_back(order.is_global() ? f : f.homogenize());
  if (in.empty()) return s;
  if (order.is_global()) {
    const auto b = buchberger(in, order, {.track_cofactors = false});
    for (const auto& g : b.generators) s.insert(g.leading_exp(order));
  } else {
    const auto hz = homogenized_order(order);
    const auto b = buchberger(in, hz, {.track_cofactors = false});
    for (const auto& g : b.generators) s.insert(g.dehomogenize().leading_exp(order));
  }
  return s;
}

struct SampleCheck {
  ParamPoint point;
  Staircase staircase;
  /// Every generator keeps its mod-Q leading exponent at the point.
  bool gens_ok = false;
  bool pass = false;
};

struct SpecializationReport {
  std::vector<SampleCheck> samples;
  bool all_pass() const {
    return std::all_of(samples.begin(), samples.end(), [](const SampleCheck& s) { return s.pass; });
  }
};

/// Specializes the inputs at each sample of V(Q) \ V(h), recomputes a
/// standard basis from scratch and compares staircases.
inline SpecializationReport verify_specialization(const GenericBasis& B,
                                                  const std::vector<ParamPoint>& samples) {
  SpecializationReport rep;
  const AScalar h = B.h();
  for (const auto& c : samples) {
    if (c.size() != B.nparams())
      throw Error(ErrorCode::DimensionMismatch, "sample point has wrong length");
    if (!B.ctx.vanishes_at(c))
      throw Error(ErrorCode::SampleOffVariety, "sample point is not on V(Q)");
    if (sgn(eval(h, c)) == 0)
      throw Error(ErrorCode::SampleOnExcludedLocus, "sample point lies on V(h)");
    SampleCheck chk;
    chk.point = c;
    std::vector<QPoly> spec;
    for (const auto& f : B.inputs) spec.push_back(specialize(f, c));
    chk.staircase = plain_staircase(spec, B.order);
    chk.gens_ok = true;
    for (const auto& g : B.gens) {
      const QPoly gc = specialize(g, c);
      if (gc.is_zero() || gc.leading_exp(B.order) != leading_mod_q(g, B.order, B.ctx).exp) {
        chk.gens_ok = false;
        break;
      }
    }
    chk.pass = chk.gens_ok && chk.staircase == B.staircase;
    rep.samples.push_back(std::move(chk));
  }
  return rep;
}

/// Random integer points of V(Q) off V(h), for Q whose reduced lex basis
/// is triangular and linear in each leading variable (including Q = 0).
/// Coordinates of free parameters are drawn from [-range, range].
inline std::vector<ParamPoint> sample_admissible_points(const PrimeContext& ctx, const AScalar& h,
                                                        std::size_t count, std::mt19937_64& rng,
                                                        std::int64_t range = 12,
                                                        std::size_t max_tries = 10000) {
  const std::size_t m = ctx.nparams();
  const auto lex = MonomialOrder::lex(m);
  // Leading variable of each basis element, which must occur linearly.
  std::vector<std::optional<std::size_t>> solved_by(m);
  for (std::size_t k = 0; k < ctx.basis().size(); ++k) {
    const auto lt = ctx.basis()[k].leading(lex);
    if (lt.exp.degree() != 1)
      throw Error(ErrorCode::InvalidArgument, "cannot sample V(Q): basis is not linear in its leads");
    std::size_t v = 0;
    while (lt.exp[v] == 0) ++v;
    if (ascalar::degree_in(ctx.basis()[k], v) != 1)
      throw Error(ErrorCode::InvalidArgument, "cannot sample V(Q): basis is not linear in its leads");
    solved_by[v] = k;
  }
  std::vector<ParamPoint> out;
  std::size_t tries = 0;
  while (out.size() < count) {
    if (++tries > max_tries)
      throw Error(ErrorCode::InvalidArgument, "could not find enough admissible sample points");
    ParamPoint c(m, Rational(0));
    for (std::size_t v = 0; v < m; ++v)
      if (!solved_by[v])
        c[v] = Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) -
                        static_cast<long>(range));
    // Lex-reduced: the element led by a_v only involves later variables.
    for (std::size_t v = m; v-- > 0;) {
      if (!solved_by[v]) continue;
      const AScalar& g = ctx.basis()[*solved_by[v]];
      const AScalar lead_coeff = ascalar::coeff_in(g, v, 1);
      const AScalar rest = ascalar::coeff_in(g, v, 0);
      const Rational lc = eval(lead_coeff, c);
      if (sgn(lc) == 0)
        throw Error(ErrorCode::InvalidArgument, "cannot sample V(Q): degenerate leading coefficient");
      c[v] = -eval(rest, c) / lc;
    }
    if (!ctx.vanishes_at(c) || sgn(eval(h, c)) == 0) continue;
    if (std::find(out.begin(), out.end(), c) != out.end()) {
      if (tries > max_tries / 2) out.push_back(c);  // tiny varieties: allow repeats
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace parastd

#endif  // PARASTD_GENSTD_HPP
