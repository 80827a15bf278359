#pragma once

#include "dcfold/coloring.hpp"
#include "dcfold/orbit.hpp"

namespace dcfold {

// The poset attached to a minuscule fundamental weight.  Its elements are
// the orbit nodes with a unique incoming weak edge, ordered opposite to the
// orbit order and colored by that edge's Dynkin node.  Filters of this
// poset then mirror the whole orbit.
struct MinusculePoset {
  WeightOrbit orbit;
  ColoredPoset colored;      // P with its coloring
  std::vector<int> ji_nodes; // orbit node backing each poset element
  std::vector<std::vector<char>> orbit_reach; // weak-order reachability

  // f: the poset elements lying (orbit-)below mu.
  Mask filter_of(int orbit_node) const;
  // g: lambda minus the simple roots counted by color.
  Weight weight_of(Mask filter) const;
};

// Throws unless fundamental_weight(node) is minuscule.
MinusculePoset build_minuscule_poset(const RootSystem& rs, int node);

// Everything the construction promises, checked mechanically:
// the orbit orders coincide, f maps nodes bijectively onto filters and is
// an order isomorphism turning reflections into toggles, g inverts f, the
// poset is connected, self-dual and d-complete, its coloring is the derived
// one, and its top tree is the Dynkin diagram via the coloring.
CheckReport verify_minuscule_correspondence(const RootSystem& rs, int node);

} // namespace dcfold
