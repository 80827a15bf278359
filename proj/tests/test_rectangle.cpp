#include "dcfold/rectangle.hpp"

#include "dcfold/folding.hpp"

#include "doctest.h"

#include <algorithm>
#include <stdexcept>

using namespace dcfold;

TEST_SUITE("rectangle") {

TEST_CASE("row profiles and index sets on Y(2x4)") {
  // mask 23 = rows {3, 1}, the shape from the three-color toggle example
  CHECK(row_profile(2, 4, 23) == std::vector<int>{3, 1});
  CHECK(index_set(2, 4, 23) == std::vector<int>{2, 5});
  CHECK(filter_with_index_set(2, 4, {2, 5}) == 23);

  CHECK(index_set(2, 4, 0) == std::vector<int>{1, 2});
  CHECK(index_set(2, 4, 255) == std::vector<int>{5, 6});
  CHECK(filter_with_index_set(2, 4, {1, 2}) == 0);
  CHECK(filter_with_index_set(2, 4, {5, 6}) == 255);

  for (Mask f : order_filters(young_rect(2, 4)))
    CHECK(filter_with_index_set(2, 4, index_set(2, 4, f)) == f);
}

TEST_CASE("shape and input validation") {
  CHECK_THROWS_AS(row_profile(3, 2, 0), std::invalid_argument);   // rows > cols
  CHECK_THROWS_AS(row_profile(0, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(row_profile(1, 2, 0b10), std::invalid_argument); // row not a prefix
  CHECK_THROWS_AS(row_profile(2, 2, 0b0100), std::invalid_argument); // lengths increase
  CHECK_THROWS_AS(row_profile(1, 2, 0b100), std::invalid_argument); // outside rectangle
  CHECK_THROWS_AS(filter_with_index_set(2, 4, {2}), std::invalid_argument);
  CHECK_THROWS_AS(filter_with_index_set(2, 4, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(filter_with_index_set(2, 4, {3, 7}), std::invalid_argument);
  CHECK_THROWS_AS(filter_with_index_set(2, 4, {4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(verify_mirror_free_equality(1, 1), std::invalid_argument);
}

TEST_CASE("mirrored filters of Y(2x4) are exactly three") {
  // indices pair up under i -> 7 - i; the offenders are {1,6}, {2,5}, {3,4}
  CHECK_FALSE(mirror_free(2, 4, 15)); // row {4,0}, indices {1,6}
  CHECK_FALSE(mirror_free(2, 4, 23)); // row {3,1}, indices {2,5}
  CHECK_FALSE(mirror_free(2, 4, 51)); // row {2,2}, indices {3,4}

  std::vector<Mask> ss = mirror_free_filters(2, 4);
  CHECK(ss.size() == 12);
  CHECK_FALSE(std::count(ss.begin(), ss.end(), Mask{15}));
  CHECK_FALSE(std::count(ss.begin(), ss.end(), Mask{23}));
  CHECK_FALSE(std::count(ss.begin(), ss.end(), Mask{51}));
  CHECK(std::count(ss.begin(), ss.end(), Mask{0}));
  CHECK(std::count(ss.begin(), ss.end(), Mask{255}));
}

TEST_CASE("mirror-free counts across shapes") {
  CHECK(mirror_free_filters(1, 2).size() == 2);
  CHECK(mirror_free_filters(1, 3).size() == 4);
  CHECK(mirror_free_filters(2, 2).size() == 4);
  CHECK(mirror_free_filters(2, 3).size() == 4);
  CHECK(mirror_free_filters(2, 5).size() == 12);
  CHECK(mirror_free_filters(3, 3).size() == 8);
  CHECK(mirror_free_filters(3, 4).size() == 8);
  CHECK(mirror_free_filters(4, 4).size() == 16);
}

TEST_CASE("folded coloring of Y(2x4) and the composite toggle value") {
  ColoredPoset folded = rectangle_folded(2, 4);
  CHECK(folded.colors() == std::vector<int>{2, 3, 2, 1, 1, 2, 3, 2});
  CHECK(color_toggle(folded, 23, 2) == 51);

  ColoredPoset plain = rectangle_colored(2, 4);
  CHECK(plain.colors() == std::vector<int>{2, 3, 4, 5, 1, 2, 3, 4});
}

TEST_CASE("index steps drive the one-color toggles") {
  for (auto [m, c] : {std::pair{1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4}}) {
    CheckReport rep = verify_index_step_rules(m, c);
    CHECK_MESSAGE(rep.ok(), rep.case_name);
  }
}

TEST_CASE("mirror-free filters are the folded toggle closure") {
  for (auto [m, c] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4},
                      {2, 5}, {3, 3}, {3, 4}, {4, 4}}) {
    CheckReport rep = verify_mirror_free_equality(m, c);
    CHECK_MESSAGE(rep.ok(), rep.case_name);
  }
}

TEST_CASE("closure membership matches the index-set test filter by filter") {
  ColoredPoset folded = rectangle_folded(2, 4);
  std::vector<Mask> closure = toggle_closure(folded, 0);
  for (Mask f : order_filters(young_rect(2, 4))) {
    bool reached = std::count(closure.begin(), closure.end(), f) > 0;
    CHECK(reached == mirror_free(2, 4, f));
  }
}

} // TEST_SUITE
