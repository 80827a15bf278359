#pragma once

#include "dcfold/cartan.hpp"
#include "dcfold/report.hpp"

#include <utility>
#include <vector>

namespace dcfold {

// One reflection step mu -> s(mu) taken at positive pairing, so the edge
// points up and the dominant source is the minimum.
struct OrbitEdge {
  int from, to;
  int label; // Dynkin node for weak edges, positive-root index for strong
};

// A Weyl-group orbit with both move graphs.  Nodes are in search order from
// the dominant weight (index 0), so heights never decrease along the list.
struct WeightOrbit {
  RootSystem rs;
  Weight lambda;
  std::vector<Weight> nodes;
  std::vector<std::vector<int>> coeffs; // lambda - node on the simple roots
  std::vector<int> height;              // coefficient sum
  std::vector<OrbitEdge> weak_edges;    // mu -> s_i(mu), mu(h_i) > 0
  std::vector<OrbitEdge> strong_edges;  // mu -> s_beta(mu), mu(beta^vee) > 0

  int index_of(const Weight& mu) const; // -1 when absent
};

WeightOrbit weyl_orbit(const RootSystem& rs, const Weight& dominant);

// All pairings with simple coroots stay within {-1, 0, 1}.
bool is_minuscule(const WeightOrbit& o);

// The same property decided without the orbit: a dominant weight is
// minuscule exactly when it pairs to at most 1 with every positive coroot.
bool is_minuscule_weight(const RootSystem& rs, const Weight& dominant);

// Reflexive-transitive closure over an edge list.
std::vector<std::vector<char>> reachability(int n,
                                            const std::vector<OrbitEdge>& edges);

// Covers of the order whose reachability matrix is given.
std::vector<std::pair<int, int>> hasse_edges(
    const std::vector<std::vector<char>>& reach);

// Sanity of the orbit graphs: the source is dominant and reaches every
// node, heights match the edge pairings, and weak moves are strong moves.
CheckReport verify_orbit_structure(const WeightOrbit& o);

} // namespace dcfold
