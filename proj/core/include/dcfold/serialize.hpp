#pragma once

#include "dcfold/folding.hpp"
#include "dcfold/minuscule.hpp"
#include "dcfold/rectangle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dcfold {

// JSON artifacts under schema "1".  Keys are emitted in sorted order, so
// equal inputs always give byte-identical output.
std::string poset_json(const Poset& p);
std::string colored_poset_json(const ColoredPoset& cp);
std::string orbit_json(const WeightOrbit& o);
std::string filters_json(const std::vector<Mask>& filters);
std::string report_json(const CheckReport& rep);

// The whole correspondence in one artifact: poset, coloring, orbit, and
// the filter attached to each orbit node.
std::string bridge_json(const MinusculePoset& mp);

// DOT artifacts.  Covers point upward, nodes sit in rank layers by height
// (posets by filter-agnostic drawing order, orbits by coefficient height).
std::string poset_dot(const Poset& p);
std::string orbit_dot(const WeightOrbit& o);

// Orbit and filter family side by side as two clusters: left the covers
// of the weak order, right the covers of the toggle order on the given
// filters, both with their move labels.
std::string orbit_and_filters_dot(const WeightOrbit& o, const ColoredPoset& cp,
                                  const std::vector<Mask>& filters);

// Node labels and edges read back out of DOT produced above, one graph
// per cluster (or a single graph when there are no clusters); lets tests
// compare emitted diagrams by graph isomorphism.
struct DotGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;
};

std::vector<DotGraph> parse_dot_clusters(const std::string& dot);

// m,n,filters,mirror_free,folded_orbit,status with status equal/differ.
std::string rectangle_csv(const std::vector<RectangleRow>& rows);
std::string rectangle_table_json(const std::vector<RectangleRow>& rows);

} // namespace dcfold
