#pragma once

#include "dcfold/cartan.hpp"
#include "dcfold/coloring.hpp"
#include "dcfold/orbit.hpp"
#include "dcfold/report.hpp"

#include <vector>

namespace dcfold {

// A non-trivial symmetry of a simply-laced Dynkin diagram together with the
// multiply-laced system built on its node orbits.  An orbit spanning an edge
// (the middle pair of an even A diagram) pairs with the doubled coroot, so
// its weight entries carry a factor of 2.
struct Folding {
  RootSystem source;
  RootSystem target;
  std::vector<int> sigma;                // node image, 1-based; [0] unused
  std::vector<std::vector<int>> orbits;  // sorted by smallest member
  std::vector<int> orbit_of;             // node -> orbit index; [0] unused
  std::vector<int> weight_mult;          // per orbit: 1, or 2 across an edge
  std::vector<std::vector<int>> folded_cartan; // rows/columns in orbit order
  std::vector<int> target_node;          // orbit index -> target node
  std::vector<int> orbit_at;             // target node -> orbit index

  bool orthogonal_orbit(int orbit_index) const {
    return weight_mult[orbit_index] == 1;
  }
};

// The classical choices: reversal for A_n, the fork swap for D_n, the arm
// rotation for D_4 when rotate is set, and the flip fixing nodes 3 and 6
// for E_6.
std::vector<int> diagram_flip(const RootSystem& rs, bool rotate = false);

// Checks that sigma preserves the Cartan matrix, folds it over the orbits,
// and matches the result against the standard matrix of the expected target
// type.  Throws invalid_argument for a bad sigma and logic_error if the
// folded matrix does not settle on exactly one node numbering.
Folding make_folding(const RootSystem& rs, const std::vector<int>& sigma);

// Pair a source weight with the orbit coroots; entries follow target nodes.
Weight restrict_weight(const Folding& fd, const Weight& mu);

// The source-side reflection over one orbit: the product of the orbit's
// simple reflections, with the middle one repeated for the edge orbit.
Weight lifted_reflection(const Folding& fd, int target_node, const Weight& mu);

// The same composite applied to a filter through the toggles of the
// source coloring.
Mask composite_toggle(const Folding& fd, const ColoredPoset& cp, Mask f,
                      int target_node);

// Colors for the quotient: each element's color mapped to its orbit's
// target node.
std::vector<int> fold_colors(const Folding& fd, const ColoredPoset& cp);

// The target-side orbit of res(lambda), with each node tied to the source
// weight sitting over it.  Lifts start at lambda and follow the composite
// reflections along weak edges; disagreement between two paths or between a
// lift and its node throws logic_error.
struct FoldedOrbit {
  Folding fold;
  WeightOrbit orbit;
  std::vector<Weight> lift;
};

FoldedOrbit build_folded_orbit(Folding fd, const Weight& lambda);

// Everything the folded correspondence promises for one minuscule weight
// and one diagram symmetry, checked exhaustively over the orbit and the
// filters of the matching poset.
CheckReport verify_folded_isomorphism(const RootSystem& rs, int weight_node,
                                      const std::vector<int>& sigma);

} // namespace dcfold
