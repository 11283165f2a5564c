#include <catch2/catch_amalgamated.hpp>

#include "parastd/parastd.hpp"

using namespace parastd;

namespace {
const std::vector<std::string> P{"a", "b"};
const std::vector<std::string> X{"x1", "x2"};
ParamPoly pp(const std::string& s) { return parse_poly(s, P, X); }
AScalar sc(const std::string& s) { return parse_scalar(s, P); }
}  // namespace

TEST_CASE("parameter fractions normalize", "[polyring]") {
  const ParamScalar a = ParamScalar::parameter(2, 0);
  const ParamScalar one = ParamScalar::constant(2, Rational(1));
  const ParamScalar x = (a * a - one) / (a - one);
  CHECK(x == a + one);
  CHECK(x.has_unit_den());
  const ParamScalar y = one / a + one / a;
  CHECK(y.num() == sc("2"));
  CHECK(y.den() == sc("a"));
  CHECK((y - y).is_zero());
}

TEST_CASE("multivariate gcd and square-free parts", "[polyring]") {
  const AScalar f = sc("(a + b)^2*(a - 1)");
  const AScalar g = sc("(a + b)*(a - 1)^3*b");
  CHECK(ascalar::monic(ascalar::gcd(f, g)) == ascalar::monic(sc("(a + b)*(a - 1)")));
  const auto sq = ascalar::squarefree_factors(sc("a^3*b*(a - b)^2"));
  CHECK(sq.size() == 3);
  AScalar prod = ascalar::one(2);
  for (const auto& s : sq) prod = prod * s;
  CHECK(ascalar::monic(prod) == ascalar::monic(sc("a*b*(a - b)")));
}

TEST_CASE("arithmetic is exact", "[polyring]") {
  const auto f = pp("a*x1 + x2");
  const auto g = pp("x1 - (1/a)*x2");
  CHECK((f * g) == pp("a*x1^2 - (1/a)*x2^2"));
  CHECK((f + g - f) == g);
  CHECK((f - f).is_zero());
}

TEST_CASE("leading term follows the order", "[polyring]") {
  const auto f = pp("a*x2 - x1*x2 + x1");
  const MonomialOrder local(2, {{-1, -1}, {-1, 0}});
  CHECK(f.leading(local).exp == Exponent{0, 1});
  CHECK(f.leading(local).coeff == ParamScalar::parameter(2, 0));
  CHECK(f.leading(MonomialOrder::grevlex(2)).exp == Exponent{1, 1});
  CHECK_THROWS_AS(ParamPoly(2).leading(local), Error);
}

TEST_CASE("homogenize and dehomogenize are inverse", "[polyring]") {
  const auto f = pp("a*x2 - x1*x2 + x1");
  const auto h = f.homogenize();
  CHECK(h.is_homogeneous());
  CHECK(h.nvars() == 3);
  CHECK(h.dehomogenize() == f);
  CHECK(*h.coeff({0, 1, 1}) == ParamScalar::parameter(2, 0));
}

TEST_CASE("specialization evaluates coefficients", "[polyring]") {
  const auto f = pp("(1/a)*x1 + b*x2");
  const QPoly s = specialize(f, {Rational(2), Rational(3)});
  CHECK(*s.coeff({1, 0}) == Rational(1, 2));
  CHECK(*s.coeff({0, 1}) == Rational(3));
  CHECK_THROWS_MATCHES(specialize(f, {Rational(0), Rational(1)}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::DenominatorVanishes;
                       }));
}

TEST_CASE("coefficient membership in Q", "[polyring]") {
  const PrimeContext q(2, {sc("a - b")});
  CHECK(q.coeff_in_q(ParamScalar(sc("a^2 - b^2"))));
  CHECK_FALSE(q.coeff_in_q(ParamScalar(sc("a"))));
  CHECK_THROWS_AS(q.coeff_in_q(ParamScalar(sc("1"), sc("a - b"))), Error);
  CHECK_THROWS_AS(PrimeContext(2, {sc("a"), sc("a - 1")}), Error);
}

TEST_CASE("combined ring round trip", "[polyring]") {
  const auto f = pp("a*b*x1^2 - 3*x2 + b");
  const QPoly c = to_combined(f, 2);
  CHECK(c.nvars() == 4);
  CHECK(from_combined(c, 2, 2) == f);
}
