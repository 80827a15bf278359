#include "dcfold/serialize.hpp"

#include "doctest.h"
#include "json.hpp"

#include <string>

using namespace dcfold;

TEST_SUITE("serialize") {

TEST_CASE("poset json bytes are frozen") {
  std::string expect = R"x({
  "covers": [
    [
      1,
      0
    ]
  ],
  "labels": [
    "(1,1)",
    "(1,2)"
  ],
  "n": 2,
  "schema": "1"
}
)x";
  CHECK(poset_json(young_rect(1, 2)) == expect);
}

TEST_CASE("poset dot bytes are frozen") {
  std::string expect = R"x(digraph poset {
  rankdir=BT;
  node [shape=box];
  p0 [label="(1,1)"];
  p1 [label="(1,2)"];
  p1 -> p0;
}
)x";
  CHECK(poset_dot(young_rect(1, 2)) == expect);
}

TEST_CASE("orbit dot bytes are frozen") {
  RootSystem a2(LieType::A, 2);
  WeightOrbit o = weyl_orbit(a2, a2.fundamental_weight(1));
  std::string expect = R"x(digraph orbit {
  rankdir=BT;
  node [shape=box];
  w0 [label="(1,0)"];
  w1 [label="(-1,1)"];
  w2 [label="(0,-1)"];
  { rank=same; w0; }
  { rank=same; w1; }
  { rank=same; w2; }
  w0 -> w1 [label="1"];
  w1 -> w2 [label="2"];
}
)x";
  CHECK(orbit_dot(o) == expect);
}

TEST_CASE("colored poset and orbit json parse back") {
  RootSystem a5(LieType::A, 5);
  MinusculePoset mp = build_minuscule_poset(a5, 2);

  auto cj = nlohmann::json::parse(colored_poset_json(mp.colored));
  CHECK(cj["schema"] == "1");
  CHECK(cj["poset"]["n"] == 8);
  CHECK(cj["kappa"].size() == 8);
  CHECK(cj["max_color"] == 5);

  auto oj = nlohmann::json::parse(orbit_json(mp.orbit));
  CHECK(oj["cartan"]["type"] == "A");
  CHECK(oj["cartan"]["rank"] == 5);
  CHECK(oj["lambda"] == nlohmann::json::parse("[0,1,0,0,0]"));
  CHECK(oj["nodes"].size() == 15);
  CHECK(oj["weak_edges"].size() == 20);
}

TEST_CASE("bridge json ties filters to orbit nodes") {
  RootSystem a2(LieType::A, 2);
  MinusculePoset mp = build_minuscule_poset(a2, 1);
  auto j = nlohmann::json::parse(bridge_json(mp));
  CHECK(j["poset"]["n"] == 2);
  CHECK(j["f_table"] == nlohmann::json::parse("[[],[0],[0,1]]"));
}

TEST_CASE("filters json lists sorted elements") {
  std::string expect = R"x({
  "count": 3,
  "filters": [
    [],
    [
      0
    ],
    [
      0,
      1
    ]
  ],
  "schema": "1"
}
)x";
  CHECK(filters_json(order_filters(young_rect(1, 2))) == expect);
}

TEST_CASE("report json carries the verdict") {
  CheckReport rep;
  rep.case_name = "demo";
  rep.add("first", true);
  rep.add("second", false, "witness text");
  auto j = nlohmann::json::parse(report_json(rep));
  CHECK(j["case"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["witness"] == "witness text");
}

TEST_CASE("paired dot for the unfolded correspondence") {
  RootSystem a5(LieType::A, 5);
  MinusculePoset mp = build_minuscule_poset(a5, 2);
  std::vector<Mask> filters = order_filters(mp.colored.poset());
  std::string dot = orbit_and_filters_dot(mp.orbit, mp.colored, filters);

  std::vector<DotGraph> gs = parse_dot_clusters(dot);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].nodes.size() == 15);
  CHECK(gs[1].nodes.size() == 15);
  CHECK(gs[0].edges.size() == 20);
  CHECK(gs[1].edges.size() == 20);
  CHECK(digraph_isomorphic(15, gs[0].edges, 15, gs[1].edges));
}

TEST_CASE("paired dot for the folded correspondence") {
  RootSystem a5(LieType::A, 5);
  Folding fd = make_folding(a5, diagram_flip(a5));
  FoldedOrbit fo = build_folded_orbit(fd, a5.fundamental_weight(2));
  ColoredPoset folded = rectangle_folded(2, 4);
  std::vector<Mask> filters = toggle_closure(folded, 0);
  std::string dot = orbit_and_filters_dot(fo.orbit, folded, filters);

  std::vector<DotGraph> gs = parse_dot_clusters(dot);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].nodes.size() == 12);
  CHECK(gs[1].nodes.size() == 12);
  CHECK(gs[0].edges.size() == gs[1].edges.size());
  CHECK(digraph_isomorphic(12, gs[0].edges, 12, gs[1].edges));
}

TEST_CASE("dot parser reads single graphs") {
  RootSystem a2(LieType::A, 2);
  std::vector<DotGraph> gs =
      parse_dot_clusters(orbit_dot(weyl_orbit(a2, a2.fundamental_weight(1))));
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].nodes == std::vector<std::string>{"(1,0)", "(-1,1)", "(0,-1)"});
  CHECK(gs[0].edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("rectangle table and csv") {
  std::vector<RectangleRow> rows = rectangle_table(5);
  REQUIRE(rows.size() == 9);
  // last row is Y_{3,3}: binomial(6,3) filters, 2^3 mirror-free
  const RectangleRow& last = rows.back();
  CHECK(last.m == 3);
  CHECK(last.n == 5);
  CHECK(last.filters == 20);
  CHECK(last.mirror_free == 8);
  CHECK(last.folded_orbit == 8);
  CHECK(last.equal);

  const RectangleRow& mid = rows[rows.size() - 2];
  CHECK(mid.m == 2);
  CHECK(mid.n == 5);
  CHECK(mid.filters == 15);
  CHECK(mid.mirror_free == 12);
  CHECK(mid.folded_orbit == 12);
  CHECK(mid.equal);

  std::string expect = R"x(m,n,filters,mirror_free,folded_orbit,status
1,1,2,2,2,equal
1,2,3,2,2,equal
1,3,4,4,4,equal
2,3,6,4,4,equal
)x";
  CHECK(rectangle_csv(rectangle_table(3)) == expect);

  auto j = nlohmann::json::parse(rectangle_table_json(rows));
  CHECK(j["table"].size() == 9);
  CHECK(j["table"][7]["mirror_free"] == 12);
}

} // TEST_SUITE
