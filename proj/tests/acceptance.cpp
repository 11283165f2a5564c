// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "parastd/cli.hpp"

using namespace parastd;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::filesystem::path> shipped() {
  std::vector<std::filesystem::path> v;
  for (const auto& e : std::filesystem::directory_iterator(PARASTD_PROBLEMS_DIR))
    if (e.path().extension() == ".txt") v.push_back(e.path());
  std::sort(v.begin(), v.end());
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Run {
  int code;
  std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "parastd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string problem_path(const std::string& name) {
  return std::string(PARASTD_PROBLEMS_DIR) + "/" + name;
}

std::vector<QPoly> specialize_all(const std::vector<ParamPoly>& F, const ParamPoint& c) {
  std::vector<QPoly> out;
  for (const auto& f : F) out.push_back(specialize(f, c));
  return out;
}

// --- 1 -------------------------------------------------------------------

void intro_example() {
  const auto p = parse_problem(slurp(problem_path("intro.txt")));
  const auto pr = p.printer();
  const auto B = generic_basis(p.ideal, p.order, PrimeContext::zero(1));
  require(pr.scalar(B.h()) == "a", "h = " + pr.scalar(B.h()));
  require(B.staircase == Staircase(2, {{0, 1}}), "generic staircase " + B.staircase.to_string());

  const auto Bq = generic_basis(p.ideal, p.order, PrimeContext(1, {parse_scalar("a", p.params)}));
  require(Bq.staircase == Staircase(2, {{1, 0}}), "staircase mod a " + Bq.staircase.to_string());

  const auto r = cli_run({"reduce", problem_path("intro.txt"), "--trunc", "3"});
  require(r.code == 0, "reduce exit code");
  require(r.out.find("  x2 + (1/a)*x1 + (1/a^2)*x1^2 + (1/a^3)*x1^3\n") != std::string::npos,
          "reduce output:\n" + r.out);
  const auto g = cli_run({"gsb", problem_path("intro.txt"), "--format", "json"});
  const auto j = nlohmann::json::parse(g.out);
  require(j["h"] == "a" && j["staircase"] == nlohmann::json::parse("[[0,1]]"), "gsb document");
}

// --- 2 -------------------------------------------------------------------

bool denominators_divide_lc_powers(const ParamPoly& p, const AScalar& lc_product) {
  for (const auto& [e, c] : p.terms()) {
    if (c.has_unit_den()) continue;
    AScalar power = ascalar::one(c.nparams());
    for (std::uint32_t k = 0; k < ascalar::degree_in(c.den(), 0) + 8; ++k) {
      power = power * lc_product;
      if (ascalar::exact_divide(power, c.den())) break;
    }
    if (!ascalar::exact_divide(power, c.den())) return false;
  }
  return true;
}

void division_suite() {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 3;
    const std::size_t m = 1 + t % 2;
    const MonomialOrder o = (t % 3 == 0)   ? MonomialOrder::lex(n)
                            : (t % 3 == 1) ? MonomialOrder::grevlex(n)
                                           : MonomialOrder(n, {std::vector<std::int64_t>(n, 2)});
    const auto f = oracle::random_param_poly(rng, n, m, 4, 5);
    std::vector<ParamPoly> G;
    const int r = 1 + static_cast<int>(oracle::uniform(rng, 0, 3));
    for (int j = 0; j < r; ++j) {
      auto g = oracle::random_param_poly(rng, n, m, 3, 3);
      if (g.is_zero()) g = lift(QPoly::constant(n, Rational(1)), m);
      G.push_back(std::move(g));
    }
    const auto d = divide(f, G, o);
    const std::string why = oracle::check_division(f, G, o, d);
    require(why.empty(), "instance " + std::to_string(t) + ": " + why);
    const auto again = divide(d.remainder, G, o);
    require(again.remainder == d.remainder, "re-division changed the remainder");
    for (const auto& q : again.quotients) require(q.is_zero(), "re-division has a nonzero quotient");
    AScalar lcs = ascalar::one(m);
    for (const auto& g : G) lcs = lcs * g.leading(o).coeff.num();
    for (const auto& q : d.quotients)
      require(denominators_divide_lc_powers(q, lcs), "quotient denominator not a product of leading coefficients");
    require(denominators_divide_lc_powers(d.remainder, lcs), "remainder denominator not a product of leading coefficients");
  }
}

// --- 3 -------------------------------------------------------------------

void buchberger_suite() {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    const MonomialOrder o = t % 2 ? MonomialOrder::grevlex(n) : MonomialOrder::lex(n);
    const bool homogeneous = t % 4 == 0;
    std::vector<QPoly> F;
    const int k = 1 + t % 3;
    while (static_cast<int>(F.size()) < k) {
      auto f = homogeneous ? oracle::random_homogeneous(rng, n, static_cast<std::uint32_t>(oracle::uniform(rng, 1, 3)), 4)
                           : oracle::random_qpoly(rng, n, 3, 4);
      if (f.total_degree() > 0) F.push_back(std::move(f));
    }
    const auto b = buchberger(F, o);
    const auto& G = b.generators;
    const std::string tag = "ideal " + std::to_string(t) + ": ";
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        const auto s = s_function(G[i], G[j], o);
        require(oracle::naive_remainder(s, G, o).is_zero(), tag + "S-function does not reduce to 0");
      }
    for (const auto& f : F) require(oracle::naive_remainder(f, G, o).is_zero(), tag + "input not reduced to 0");
    require(cofactors_certified(b), tag + "cofactors do not reproduce the basis");
    if (homogeneous)
      for (const auto& g : G) require(g.is_homogeneous(), tag + "inhomogeneous element from homogeneous input");
  }
}

// --- 4 -------------------------------------------------------------------

void specialization_theorem() {
  std::size_t parametric = 0;
  for (const auto& path : shipped()) {
    const auto p = parse_problem(slurp(path));
    if (p.nparams() == 0) continue;
    ++parametric;
    const std::string tag = path.filename().string() + ": ";
    const auto B = generic_basis(p.ideal, p.order, PrimeContext(p.nparams(), p.q));
    std::mt19937_64 rng(1000 + parametric);
    const auto pts = sample_admissible_points(B.ctx, B.h(), 10, rng);
    const auto rep = verify_specialization(B, pts);
    require(rep.samples.size() == 10, tag + "wrong sample count");
    require(rep.all_pass(), tag + "verify_specialization failed");
    for (const auto& c : pts) {
      const auto spec = specialize_all(p.ideal, c);
      require(oracle::staircase(spec, p.order) == B.staircase, tag + "naive oracle staircase differs");
      if (p.order.is_degree_compatible_local()) {
        std::uint64_t r = 0;
        for (const auto& g : B.staircase.generators()) r = std::max<std::uint64_t>(r, g.degree());
        const oracle::LocalEchelon ech(spec, p.order, r + 1);
        for (const auto& a : oracle::LocalEchelon::monomials(p.nvars(), r + 1))
          require(ech.pivot(a) == B.staircase.contains(a), tag + "linear algebra oracle disagrees");
      }
    }
  }
  require(parametric >= 5, "fewer than 5 parametric examples shipped");
}

// --- 5 -------------------------------------------------------------------

void comprehensive_partition() {
  std::mt19937_64 rng(4242);
  for (const char* name : {"intro.txt", "milnor.txt"}) {
    const auto p = parse_problem(slurp(problem_path(name)));
    const auto r = comprehensive_basis(p.ideal, p.order, p.nparams(), 8);
    std::vector<ParamPoint> pts{{Rational(0)}};
    for (int t = 0; t < 100; ++t) {
      const auto num = oracle::uniform(rng, -40, 40);
      const auto den = oracle::uniform(rng, 1, 6);
      pts.push_back({Rational(num, den)});
      pts.back()[0].canonicalize();
    }
    std::map<std::size_t, std::size_t> hits;
    for (const auto& c : pts) {
      const auto k = locate(r, c);  // throws NoCell / MultipleCells
      ++hits[k];
      const auto s = oracle::staircase(specialize_all(p.ideal, c), p.order);
      require(s == r.cells[k].staircase, std::string(name) + ": staircase not constant on a cell at a=" + c[0].get_str());
    }
    require(hits.size() == r.cells.size(), std::string(name) + ": a cell was never hit");
  }

  // Milnor numbers, cross-checked by counting the complement of the
  // oracle staircase and by the local quotient dimension.
  const auto p = parse_problem(slurp(problem_path("milnor.txt")));
  const auto strata = hilbert_partition(p.ideal, p.order, 1);
  require(strata.size() == 2, "expected two Hilbert strata");
  const std::vector<std::pair<Rational, unsigned>> expected{{Rational(1), 1u}, {Rational(0), 4u}};
  for (const auto& [a, mu] : expected) {
    const auto spec = specialize_all(p.ideal, {a});
    const auto s = oracle::staircase(spec, p.order);
    const auto count = oracle::complement_count(s);
    require(count && *count == mu, "brute-force Milnor number at a=" + a.get_str());
    require(oracle::LocalEchelon(spec, p.order, 6).hsf() == mu, "local quotient dimension at a=" + a.get_str());
    bool found = false;
    for (const auto& st : strata)
      for (const auto& cell : st.cells)
        if (cell.contains({a})) {
          found = true;
          require(st.milnor && *st.milnor == mu, "library Milnor number at a=" + a.get_str());
        }
    require(found, "no stratum for a=" + a.get_str());
  }
}

// --- 6 -------------------------------------------------------------------

void hilbert_oracle() {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 20; ++t) {
    const auto E = oracle::random_staircase(rng, 1 + t % 3, 5, 6);
    for (std::uint64_t r = 0; r <= 12; ++r)
      require(hsf(E, r) == oracle::lattice_hsf(E, r), "hsf differs from enumeration for " + E.to_string());
    const std::uint64_t r_max = default_r_max(E);
    const auto d = hilbert_polynomial(E, r_max);
    for (std::uint64_t r = d.r0; r <= r_max + 6; ++r)
      require(d.polynomial(Rational(static_cast<long>(r))) == Rational(mpz_class(oracle::lattice_hsf(E, r))),
              "Hilbert polynomial misses HSF(" + std::to_string(r) + ") for " + E.to_string());
    if (d.r0 > 0)
      require(d.polynomial(Rational(static_cast<long>(d.r0 - 1))) != Rational(d.values[d.r0 - 1]),
              "stabilization index is not minimal");
  }
}

// --- 7 -------------------------------------------------------------------

void reduced_uniqueness() {
  const auto p = parse_problem(slurp(problem_path("intro.txt")));
  const auto& f = p.ideal[0];
  const auto X = [&](const std::string& s) { return parse_poly(s, p.params, p.vars); };
  const std::vector<std::vector<ParamPoly>> sets{
      {f}, {X("1 + x2") * f, X("2 - x1") * f}, {f, X("x1") * f, X("a + x2") * f}};
  for (const bool mod_a : {false, true}) {
    const PrimeContext ctx = mod_a ? PrimeContext(1, {parse_scalar("a", p.params)}) : PrimeContext::zero(1);
    std::vector<GenericBasis> R;
    for (const auto& F : sets) R.push_back(generic_reduced_basis(generic_basis(F, p.order, ctx), 3));
    for (std::size_t k = 1; k < R.size(); ++k) {
      require(R[k].staircase == R[0].staircase, "staircases differ");
      require(R[k].gens.size() == R[0].gens.size(), "generator counts differ");
      for (std::size_t i = 0; i < R[0].gens.size(); ++i) {
        const ParamPoly diff = R[k].gens[i] - R[0].gens[i];
        for (const auto& [e, c] : diff.terms())
          require(ctx.coeff_in_q(c), std::string("difference not in Q") + (mod_a ? " (Q = <a>)" : " (Q = 0)"));
      }
    }
  }
}

// --- 8 -------------------------------------------------------------------

void cli_contract() {
  for (const auto& path : shipped()) {
    const std::string tag = path.filename().string() + ": ";
    const auto p = parse_problem(slurp(path));
    const std::string once = print_problem(p);
    require(print_problem(parse_problem(once)) == once, tag + "problem text does not round trip");
    for (const char* cmd : {"gsb", "reduce", "comprehensive"}) {
      const auto r = cli_run({cmd, path.string(), "--format", "json"});
      require(r.code == 0, tag + cmd + " failed: " + r.err);
      const auto j = nlohmann::json::parse(r.out);
      std::vector<std::string> emitted;
      if (j.contains("basis"))
        for (const auto& s : j["basis"]) emitted.push_back(s);
      if (j.contains("cells"))
        for (const auto& c : j["cells"])
          for (const auto& s : c["basis"]) emitted.push_back(s);
      for (const auto& s : emitted)
        require(p.printer().poly(parse_poly(s, p.params, p.vars), p.order) == s, tag + "polynomial does not round trip: " + s);
    }
    for (const char* cmd : {"verify", "comprehensive"}) {
      const auto a = cli_run({cmd, path.string(), "--seed", "31", "--format", "json"});
      const auto b = cli_run({cmd, path.string(), "--seed", "31", "--format", "json"});
      require(a.code == 0 && a.out == b.out, tag + cmd + " output is not reproducible");
    }
  }
  struct Case {
    std::string text;
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {"vars: x1\nideal:\n", {"gsb"}, 1},
      {"params: a\nvars: x1\nideal: a*y\n", {"gsb"}, 1},
      {"vars: x1\nvars: x1\nideal: x1\n", {"gsb"}, 1},
      {"vars: x1\nideal: (x1 + 1\n", {"gsb"}, 1},
      {"vars: x1\nideal: x1^\n", {"gsb"}, 1},
      {"vars: x1\norder: matrix [[1],[2\nideal: x1\n", {"gsb"}, 1},
      {"params: a\nvars: x1\nideal: x1/x1\n", {"gsb"}, 1},
      {"params: a\nvars: x1\nideal: a*x1\nQ: a, a - 1\n", {"gsb"}, 1},
      {"params: a\nvars: x1, x2\norder: matrix [[-1,-1],[-1,0]]\nideal: a*x2 - x1*x2 + x1\n", {"verify", "--point", "a=0"}, 1},
      {"params: a\nvars: x1, x2\norder: matrix [[-1,-1],[-1,0]]\nideal: a*x2 - x1*x2 + x1\n", {"reduce", "--trunc", "0"}, 1},
      {"params: a\nvars: x1, x2\norder: matrix [[-1,-1],[-1,0]]\nideal: a*x2 - x1*x2 + x1\n", {"verify", "--point", "a=2"}, 0},
      {"params: a\nvars: x1, x2\norder: matrix [[-1,-1],[-1,0]]\nideal: a*x2 - x1*x2 + x1\n", {"verify", "--expect-staircase", "[[1,0]]"}, 2},
      {"params: a\nvars: x1, x2\norder: matrix [[-1,-1],[-1,0]]\nideal: a*x2 - x1*x2 + x1\n", {"verify", "--expect-staircase", "[[0,1]]"}, 0},
  };
  const auto dir = std::filesystem::temp_directory_path() / "parastd_acceptance";
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto file = dir / ("case" + std::to_string(i) + ".txt");
    std::ofstream(file) << cases[i].text;
    std::vector<std::string> args{cases[i].args.front(), file.string()};
    args.insert(args.end(), cases[i].args.begin() + 1, cases[i].args.end());
    const auto r = cli_run(args);
    require(r.code == cases[i].code, "malformed-input case " + std::to_string(i) + " exited " + std::to_string(r.code) +
                                         " (expected " + std::to_string(cases[i].code) + "): " + r.err);
    if (r.code == 1) require(r.err.rfind("error[", 0) == 0, "error message format: " + r.err);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "intro example reproduction", 1.0, intro_example},
      {2, "division suite (500 random instances)", 30.0, division_suite},
      {3, "buchberger suite (100 random ideals)", 60.0, buchberger_suite},
      {4, "specialization on shipped examples", 60.0, specialization_theorem},
      {5, "comprehensive partition and Milnor numbers", 30.0, comprehensive_partition},
      {6, "Hilbert-Samuel oracle equivalence", 10.0, hilbert_oracle},
      {7, "reduced basis uniqueness modulo Q", 60.0, reduced_uniqueness},
      {8, "CLI contract", 120.0, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail = "over the time limit";
    }
    std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs,
                c.limit_s, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
