#include <catch2/catch_amalgamated.hpp>

#include "parastd/parastd.hpp"

using namespace parastd;

TEST_CASE("grevlex compares by degree then reverse lex", "[orders]") {
  const auto o = MonomialOrder::grevlex(3);
  CHECK(o.greater({1, 1, 0}, {2, 0, 0}) == false);
  CHECK(o.greater({2, 0, 0}, {1, 1, 0}));
  CHECK(o.greater({1, 1, 0}, {1, 0, 1}));
  CHECK(o.greater({0, 0, 2}, {1, 0, 0}));
  CHECK(o.compare({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(o.kind() == OrderKind::Global);
}

TEST_CASE("lex compares entry by entry", "[orders]") {
  const auto o = MonomialOrder::lex(2);
  CHECK(o.greater({1, 0}, {0, 5}));
  CHECK(o.greater({1, 1}, {1, 0}));
  CHECK(o.is_global());
}

TEST_CASE("local and mixed orders are classified", "[orders]") {
  const MonomialOrder intro(2, {{-1, -1}, {-1, 0}});
  CHECK(intro.kind() == OrderKind::Local);
  CHECK(intro.greater({0, 1}, {1, 0}));
  CHECK(intro.greater({1, 0}, {1, 1}));
  CHECK(intro.greater({1, 0}, {2, 0}));
  CHECK(intro.is_degree_compatible_local());

  const auto ng = MonomialOrder::neg_grevlex(2);
  CHECK(ng.kind() == OrderKind::Local);
  CHECK(ng.greater({0, 0}, {1, 0}));
  CHECK(ng.is_degree_compatible_local());

  const MonomialOrder mixed(2, {{1, 0}, {0, -1}});
  CHECK(mixed.kind() == OrderKind::Mixed);
  CHECK_FALSE(mixed.is_degree_compatible_local());
}

TEST_CASE("orders are compatible with addition", "[orders]") {
  const std::vector<MonomialOrder> orders{MonomialOrder::grevlex(3), MonomialOrder::lex(3),
                                          MonomialOrder::neg_grevlex(3),
                                          MonomialOrder(3, {{1, 0, 0}, {0, -1, -1}})};
  const std::vector<Exponent> pts{{0, 0, 0}, {1, 0, 2}, {0, 3, 1}, {2, 2, 0}, {1, 1, 1}};
  for (const auto& o : orders)
    for (const auto& a : pts)
      for (const auto& b : pts)
        for (const auto& c : pts) CHECK(o.compare(a, b) == o.compare(a + c, b + c));
}

TEST_CASE("row length mismatch is rejected", "[orders]") {
  CHECK_THROWS_AS(MonomialOrder(2, {{1, 1, 1}}), Error);
}

TEST_CASE("homogenized order is global and puts degree first", "[orders]") {
  const MonomialOrder intro(2, {{-1, -1}, {-1, 0}});
  const auto h = homogenized_order(intro);
  CHECK(h.is_global());
  CHECK(h.nvars() == 3);
  // Same total degree: the main order decides, z-power is irrelevant.
  CHECK(h.greater({0, 1, 1}, {1, 1, 0}));
  CHECK(h.greater({1, 0, 1}, {1, 1, 0}));
  CHECK(h.greater({0, 0, 3}, {1, 1, 0}));
}

TEST_CASE("composite order ranks main exponent before parameters", "[orders]") {
  const CompositeOrder co{MonomialOrder::grevlex(2), 1, CompositeVariant::Block};
  CHECK(composite_compare(co, {5}, {0, 1}, {0}, {1, 0}) < 0);
  CHECK(composite_compare(co, {2}, {1, 0}, {1}, {1, 0}) > 0);
  const auto m = co.as_matrix();
  CHECK(m.compare({0, 1, 5}, {1, 0, 0}) < 0);
  CHECK(m.compare({1, 0, 2}, {1, 0, 1}) > 0);
  CHECK(m.is_global());

  const CompositeOrder hc{MonomialOrder(2, {{-1, -1}, {-1, 0}}), 1, CompositeVariant::Homogenized};
  CHECK(hc.main_slots() == 3);
  CHECK(hc.as_matrix().is_global());
}
