#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace parastd;

namespace {
const std::vector<std::string> A{"a"};
const std::vector<std::string> X{"x1", "x2"};
const MonomialOrder intro_order(2, {{-1, -1}, {-1, 0}});
ParamPoly pp(const std::string& s) { return parse_poly(s, A, X); }
}  // namespace

TEST_CASE("intro example splits into a != 0 and a = 0", "[comprehensive]") {
  const auto r = comprehensive_basis({pp("a*x2 - x1*x2 + x1")}, intro_order, 1);
  REQUIRE(r.cells.size() == 2);
  CHECK(r.cells[0].cell.vanish.empty());
  CHECK(r.cells[0].cell.nonvanish == std::vector<AScalar>{parse_scalar("a", A)});
  CHECK(r.cells[0].staircase == Staircase(2, {{0, 1}}));
  CHECK(r.cells[1].cell.vanish == std::vector<AScalar>{parse_scalar("a", A)});
  CHECK(r.cells[1].staircase == Staircase(2, {{1, 0}}));
  const auto shown = reduce_mod_q(r.cells[1].basis.gens.at(0), r.cells[1].basis.ctx);
  CHECK(Printer(A, X).poly(shown, intro_order) == "x1 - x1*x2");
  CHECK(locate(r, {Rational(2)}) == 0);
  CHECK(locate(r, {Rational(0)}) == 1);
}

TEST_CASE("parameter-free input gives one cell", "[comprehensive]") {
  const std::vector<std::string> none;
  const auto r = comprehensive_basis({parse_poly("x1", none, X)}, MonomialOrder::grevlex(2), 0);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].cell.vanish.empty());
  CHECK(r.cells[0].cell.nonvanish.empty());
  CHECK(r.cells[0].staircase == Staircase(2, {{1, 0}}));
  CHECK(locate(r, {}) == 0);
}

TEST_CASE("Milnor family has distinct staircases per cell", "[comprehensive]") {
  const std::vector<ParamPoly> F{pp("3*x1^2 + a*x2"), pp("3*x2^2 + a*x1")};
  const auto o = MonomialOrder::neg_grevlex(2);
  const auto r = comprehensive_basis(F, o, 1);
  REQUIRE(r.cells.size() == 2);
  CHECK(r.cells[locate(r, {Rational(1)})].staircase == Staircase(2, {{1, 0}, {0, 1}}));
  CHECK(r.cells[locate(r, {Rational(0)})].staircase == Staircase(2, {{2, 0}, {0, 2}}));
  for (const Rational c : {Rational(1), Rational(0)}) {
    std::vector<QPoly> spec;
    for (const auto& f : F) spec.push_back(specialize(f, {c}));
    CHECK(oracle::staircase(spec, o) == r.cells[locate(r, {c})].staircase);
  }
}

TEST_CASE("two-parameter partition covers and separates", "[comprehensive]") {
  const std::vector<std::string> AB{"a", "b"};
  const std::vector<ParamPoly> F{parse_poly("x1^2 - a*x2", AB, X), parse_poly("x1*x2 - b", AB, X)};
  const auto o = MonomialOrder::grevlex(2);
  const auto r = comprehensive_basis(F, o, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    ParamPoint c{Rational(oracle::uniform(rng, -2, 2)), Rational(oracle::uniform(rng, -2, 2))};
    const auto k = locate(r, c);
    std::vector<QPoly> spec;
    for (const auto& f : F) spec.push_back(specialize(f, c));
    INFO("a=" << c[0].get_str() << " b=" << c[1].get_str());
    CHECK(oracle::staircase(spec, o) == r.cells[k].staircase);
  }
}

TEST_CASE("empty cells are detected", "[comprehensive]") {
  CHECK_FALSE(cell_nonempty({parse_scalar("a", A)}, {parse_scalar("a", A)}, 1));
  CHECK_FALSE(cell_nonempty({parse_scalar("a^2", A)}, {parse_scalar("a", A)}, 1));
  CHECK(cell_nonempty({parse_scalar("a - 1", A)}, {parse_scalar("a", A)}, 1));
}

TEST_CASE("depth limit is reported", "[comprehensive]") {
  const auto o = MonomialOrder::neg_grevlex(2);
  CHECK_THROWS_AS(comprehensive_basis({pp("3*x1^2 + a*x2"), pp("3*x2^2 + a*x1")}, o, 1, 0), Error);
}
