#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace parastd;

TEST_CASE("hsf small cases", "[hilbert]") {
  const Staircase E(2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(hsf(E, 0) == 1);
  CHECK(hsf(E, 1) == 3);
  CHECK(hsf(E, 5) == 3);
  CHECK(hsf(Staircase(2), 2) == 6);
  CHECK(hsf(Staircase(2, {{0, 0}}), 4) == 0);
}

TEST_CASE("hilbert polynomials", "[hilbert]") {
  const auto d = hilbert_polynomial(Staircase(2, {{2, 0}, {1, 1}, {0, 2}}), 6);
  CHECK(d.polynomial.to_string() == "3");
  CHECK(d.r0 == 1);
  const auto line = hilbert_polynomial(Staircase(2, {{1, 0}}), 5);
  CHECK(line.polynomial.to_string() == "r + 1");
  CHECK(line.r0 == 0);
  const auto free1 = hilbert_polynomial(Staircase(1), 3);
  CHECK(free1.polynomial.to_string() == "r + 1");
  const auto plane = hilbert_polynomial(Staircase(2), 4);
  CHECK(plane.polynomial.to_string() == "(1/2)*r^2 + (3/2)*r + 1");
  CHECK_THROWS_AS(hilbert_polynomial(Staircase(2, {{3, 3}}), 3), Error);
}

TEST_CASE("milnor numbers", "[hilbert]") {
  CHECK(*milnor_number(Staircase(2, {{2, 0}, {0, 2}})) == 4);
  CHECK(*milnor_number(Staircase(2, {{1, 0}, {0, 1}})) == 1);
  CHECK_FALSE(milnor_number(Staircase(2)).has_value());
  CHECK_FALSE(milnor_number(Staircase(2, {{1, 1}})).has_value());
}

TEST_CASE("hsf matches lattice enumeration", "[hilbert]") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto E = oracle::random_staircase(rng, 1 + t % 3, 5, 6);
    for (std::uint64_t r = 0; r <= 12; ++r) CHECK(hsf(E, r) == oracle::lattice_hsf(E, r));
    const auto mu = milnor_number(E);
    const auto bf = oracle::complement_count(E);
    CHECK(mu.has_value() == bf.has_value());
    if (mu && bf) CHECK(*mu == *bf);
  }
}

TEST_CASE("slicing agrees with inclusion-exclusion", "[hilbert]") {
  Staircase E(3);
  for (std::uint32_t i = 0; i <= 12; ++i) E.insert(Exponent{i, 12 - i, 0});
  E.insert(Exponent{0, 0, 5});
  REQUIRE(E.generators().size() > 12);
  for (std::uint64_t r = 0; r <= 10; ++r) CHECK(hsf(E, r) == oracle::lattice_hsf(E, r));
}

TEST_CASE("hsf of a standard basis equals the local quotient dimension", "[hilbert]") {
  const std::vector<std::string> none;
  const std::vector<std::string> X{"x1", "x2"};
  const auto o = MonomialOrder::neg_grevlex(2);
  auto qp = [&](const std::string& s) {
    return parse_poly(s, none, X).map_coefficients([](const ParamScalar& c) { return ascalar::constant_value(c.num()); });
  };
  const std::vector<std::vector<QPoly>> ideals{{qp("3*x1^2 + x2"), qp("3*x2^2 + x1")},
                                                {qp("x1^2 + x2^3"), qp("x1*x2")},
                                                {qp("x1 - x1^2*x2 + x2^3")}};
  for (const auto& F : ideals) {
    const auto s = plain_staircase(F, o);
    for (std::uint64_t r = 0; r <= 6; ++r) {
      const oracle::LocalEchelon ech(F, o, r);
      CHECK(hsf(s, r) == ech.hsf());
    }
  }
}

TEST_CASE("Hilbert partition of the Milnor family", "[hilbert]") {
  const std::vector<std::string> A{"a"};
  const std::vector<std::string> X{"x1", "x2"};
  const std::vector<ParamPoly> F{parse_poly("3*x1^2 + a*x2", A, X), parse_poly("3*x2^2 + a*x1", A, X)};
  const auto strata = hilbert_partition(F, MonomialOrder::neg_grevlex(2), 1);
  REQUIRE(strata.size() == 2);
  CHECK(*strata[0].milnor == 1);
  CHECK(*strata[1].milnor == 4);
  CHECK(strata[1].cells[0].vanish == std::vector<AScalar>{parse_scalar("a", A)});

  const std::vector<std::string> none;
  const auto single = hilbert_partition({parse_poly("x1", none, X), parse_poly("x2", none, X)},
                                        MonomialOrder::neg_grevlex(2), 0);
  REQUIRE(single.size() == 1);
  CHECK(*single[0].milnor == 1);
  CHECK(single[0].data.polynomial.to_string() == "1");
  CHECK_THROWS_AS(hilbert_partition(F, MonomialOrder::grevlex(2), 1), Error);
}
