#include "doctest.h"
#include "dcfold/poset.hpp"

#include <set>
#include <stdexcept>

using namespace dcfold;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST_SUITE("poset") {

TEST_CASE("constructor rejects malformed input") {
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument); // cycle
  CHECK_THROWS_AS(Poset(1, {{0, 0}}), std::invalid_argument);         // loop
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {0, 1}}), std::invalid_argument); // dup
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);         // range
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}),
                  std::invalid_argument); // implied by transitivity
  CHECK_THROWS_AS(Poset(2, {}, {"a"}), std::invalid_argument); // labels
  CHECK_THROWS_AS(Poset(65, {}), std::invalid_argument);       // too big
}

TEST_CASE("order and closure on a fence") {
  // 0 -> 2 <- 1 -> 3
  Poset p(4, {{0, 2}, {1, 2}, {1, 3}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 3));
  CHECK(!p.leq(0, 3));
  CHECK(!p.leq(2, 3));
  CHECK(p.leq(2, 2));
  CHECK(p.up_set(1) == (mask_bit(1) | mask_bit(2) | mask_bit(3)));
  CHECK(p.down_set(2) == (mask_bit(0) | mask_bit(1) | mask_bit(2)));
  CHECK(p.maximal_elements() == std::vector<int>{2, 3});
  CHECK(p.minimal_elements() == std::vector<int>{0, 1});
}

TEST_CASE("rectangle shape and covers") {
  Poset y = young_rect(2, 4);
  CHECK(y.size() == 8);
  CHECK(y.covers().size() == 10);
  CHECK(y.label(0) == "(1,1)");
  CHECK(y.label(4) == "(2,1)");
  CHECK(y.maximal_elements() == std::vector<int>{0}); // (1,1) on top
  CHECK(y.minimal_elements() == std::vector<int>{7}); // (2,4) at bottom
  // (2,2) <= (1,3) fails: columns go the wrong way.
  CHECK(!y.leq(5, 2));
  CHECK(y.leq(5, 1)); // (2,2) <= (1,2)
}

TEST_CASE("filter counts match closed forms") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n)
      CHECK(order_filters(young_rect(m, n)).size() ==
            static_cast<std::size_t>(binom(m + n, m)));
  for (int n = 1; n <= 5; ++n)
    CHECK(order_filters(shifted_young(n)).size() == (std::size_t{1} << n));
  for (int k = 3; k <= 6; ++k)
    CHECK(order_filters(double_tailed(k)).size() ==
          static_cast<std::size_t>(2 * k));
}

TEST_CASE("filter search agrees with the subset scan") {
  for (const Poset& p :
       {young_rect(2, 3), shifted_young(4), double_tailed(5),
        Poset(4, {{0, 2}, {1, 2}, {1, 3}})}) {
    CHECK(order_filters(p) == order_filters_by_scan(p));
  }
}

TEST_CASE("filters are up-closed and sorted") {
  Poset y = young_rect(2, 4);
  auto fs = order_filters(y);
  REQUIRE(fs.size() == 15);
  CHECK(fs.front() == 0);
  CHECK(fs.back() == (mask_bit(8) - 1));
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    CHECK(y.is_filter(fs[i]));
    int ca = mask_count(fs[i]), cb = mask_count(fs[i + 1]);
    CHECK((ca < cb || (ca == cb && fs[i] < fs[i + 1])));
  }
  CHECK(y.is_filter(mask_bit(0)));
  CHECK(!y.is_filter(mask_bit(4))); // {(2,1)} misses (1,1)
}

TEST_CASE("double-tailed diamonds classify themselves") {
  for (int k = 3; k <= 6; ++k) {
    Poset d = double_tailed(k);
    IntervalClass c = classify_interval(d, 0, d.size() - 1);
    CHECK(c.shape == IntervalShape::diamond);
    CHECK(c.k == k);
  }
  for (int k = 4; k <= 6; ++k) {
    Poset d = double_tailed(k, true);
    IntervalClass c = classify_interval(d, 0, d.size() - 1);
    CHECK(c.shape == IntervalShape::diamond_minus);
    CHECK(c.k == k);
  }
}

TEST_CASE("interval classification inside d_4(1)") {
  Poset d = double_tailed(4); // 0=w4 1=w3 2=x 3=y 4=z3 5=z4
  CHECK(classify_interval(d, 1, 4).shape == IntervalShape::diamond);
  CHECK(classify_interval(d, 1, 4).k == 3);
  CHECK(classify_interval(d, 0, 4).shape == IntervalShape::diamond_minus);
  CHECK(classify_interval(d, 0, 4).k == 4);
  CHECK(classify_interval(d, 0, 1).shape == IntervalShape::other); // chain
  CHECK(classify_interval(d, 2, 3).shape == IntervalShape::other); // no order
  CHECK(classify_interval(d, 1, 5).shape == IntervalShape::other); // d_4 plus z4
}

TEST_CASE("two incomparable pairs are rejected") {
  Poset y = young_rect(2, 4);
  // [(2,4),(1,2)] contains pairs {(2,2),(1,4)} and {(2,3),(1,4)}.
  CHECK(classify_interval(y, 7, 1).shape == IntervalShape::other);
  CHECK(classify_interval(y, 7, 2).shape == IntervalShape::diamond);
}

TEST_CASE("completing tops") {
  Poset y = young_rect(2, 4);
  auto id = [](int i, int j) { return (i - 1) * 4 + (j - 1); };
  CHECK(completing_tops(y, id(2, 2)) ==
        std::vector<std::pair<int, int>>{{id(1, 1), 3}});
  CHECK(completing_tops(y, id(2, 4)) ==
        std::vector<std::pair<int, int>>{{id(1, 3), 3}});
  CHECK(completing_tops(y, id(1, 2)).empty());
  Poset d = double_tailed(5);
  CHECK(completing_tops(d, 0) ==
        std::vector<std::pair<int, int>>{{d.size() - 1, 5}});
}

TEST_CASE("complete posets pass the axioms") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n) CHECK(is_d_complete(young_rect(m, n)));
  for (int n = 1; n <= 5; ++n) CHECK(is_d_complete(shifted_young(n)));
  for (int k = 3; k <= 7; ++k) CHECK(is_d_complete(double_tailed(k)));
  CHECK(is_d_complete(Poset(3, {{0, 1}, {1, 2}}))); // chain
}

TEST_CASE("axiom 1: open triple") {
  Poset v(3, {{0, 1}, {0, 2}});
  auto rep = d_complete_report(v);
  REQUIRE(!rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == 1);
  CHECK(rep.violations[0].elements == std::vector<int>{0, 1, 2});
}

TEST_CASE("axiom 1: open broken diamond") {
  // d_4^-(1) on its own cannot complete.
  auto rep = d_complete_report(double_tailed(4, true));
  REQUIRE(!rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == 1);
  CHECK(rep.violations[0].elements == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("axiom 2: the top of a diamond covers an outsider") {
  Poset v(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 3}});
  auto rep = d_complete_report(v);
  REQUIRE(!rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == 2);
  CHECK(rep.violations[0].elements == std::vector<int>{0, 3, 4});
}

TEST_CASE("axiom 3: overlapping triples in a bowtie") {
  Poset v(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto rep = d_complete_report(v);
  REQUIRE(!rep.ok);
  bool saw3 = false;
  for (const auto& viol : rep.violations)
    if (viol.axiom == 3) {
      saw3 = true;
      CHECK(viol.elements == std::vector<int>{0, 1, 2, 3});
    }
  CHECK(saw3);
}

TEST_CASE("axiom 3: overlapping broken diamonds") {
  // Two minima below a shared w3 -> {x,y} -> z3 tail.
  Poset v(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  auto rep = d_complete_report(v);
  REQUIRE(!rep.ok);
  bool saw3 = false;
  for (const auto& viol : rep.violations)
    if (viol.axiom == 3 && viol.elements.size() == 6) saw3 = true;
  CHECK(saw3);
}

TEST_CASE("top trees") {
  CHECK(top_tree(young_rect(2, 4)) == Mask{0b11111});
  CHECK(mask_count(top_tree(young_rect(3, 4))) == 6); // row 1 plus column 1
  CHECK(top_tree(shifted_young(5)) == Mask{0b111111});
  for (int k = 3; k <= 6; ++k)
    CHECK(mask_count(top_tree(double_tailed(k))) == k);
  CHECK_THROWS_AS(top_tree(Poset(2, {})), std::invalid_argument);
}

TEST_CASE("duality and structure") {
  for (const Poset& p : {young_rect(2, 4), shifted_young(4), double_tailed(5),
                         shifted_young(5)}) {
    auto s = structure_report(p);
    CHECK(s.connected);
    CHECK(s.unique_max);
    CHECK(s.self_dual);
  }
  Poset chain(3, {{0, 1}, {1, 2}});
  Poset v(3, {{0, 1}, {0, 2}});
  CHECK(!structure_report(v).unique_max);
  CHECK(!structure_report(v).self_dual);
  CHECK(poset_isomorphic(dual(dual(v)), v));
  CHECK(structure_report(chain).self_dual);
}

TEST_CASE("poset isomorphism") {
  CHECK(poset_isomorphic(young_rect(2, 3), young_rect(3, 2)));
  CHECK(poset_isomorphic(shifted_young(3), double_tailed(4)));
  CHECK(poset_isomorphic(young_rect(2, 2), double_tailed(3)));
  CHECK(!poset_isomorphic(young_rect(2, 2), Poset(4, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK(!poset_isomorphic(young_rect(2, 3), shifted_young(3)));
  CHECK(!poset_isomorphic(young_rect(1, 3), young_rect(2, 2))); // sizes differ
}

TEST_CASE("digraph isomorphism") {
  CHECK(digraph_isomorphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4,
                           {{2, 0}, {0, 3}, {3, 1}, {1, 2}}));
  CHECK(!digraph_isomorphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4,
                            {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(!digraph_isomorphic(3, {{0, 1}}, 3, {{0, 1}, {1, 2}}));
  CHECK(digraph_isomorphic(0, {}, 0, {}));
}

TEST_CASE("mask helpers") {
  CHECK(mask_count(0) == 0);
  CHECK(mask_count(0b1011) == 3);
  CHECK(mask_elements(0b1011) == std::vector<int>{0, 1, 3});
  CHECK(mask_contains(0b10, 1));
  CHECK(!mask_contains(0b10, 0));
}

} // TEST_SUITE
