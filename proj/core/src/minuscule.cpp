#include "dcfold/minuscule.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dcfold {

namespace {

std::string weight_label(const Weight& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

} // namespace

Mask MinusculePoset::filter_of(int orbit_node) const {
  Mask f = 0;
  for (std::size_t e = 0; e < ji_nodes.size(); ++e)
    if (orbit_reach[ji_nodes[e]][orbit_node]) f |= mask_bit(e);
  return f;
}

Weight MinusculePoset::weight_of(Mask filter) const {
  Weight mu = orbit.lambda;
  for (int e : mask_elements(filter)) {
    Weight alpha = orbit.rs.simple_root(colored.color(e));
    for (int r = 0; r < orbit.rs.rank(); ++r) mu[r] -= alpha[r];
  }
  return mu;
}

MinusculePoset build_minuscule_poset(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw std::invalid_argument("no such Dynkin node");
  if (rs.type() != LieType::A && rs.type() != LieType::D &&
      rs.type() != LieType::E)
    throw std::invalid_argument("poset construction needs a simply-laced type");
  Weight lambda = rs.fundamental_weight(node);
  if (!is_minuscule_weight(rs, lambda))
    throw std::invalid_argument("weight is not minuscule");

  MinusculePoset mp{weyl_orbit(rs, lambda), {}, {}, {}};
  const WeightOrbit& o = mp.orbit;
  int n = static_cast<int>(o.nodes.size());
  mp.orbit_reach = reachability(n, o.weak_edges);

  std::vector<std::vector<int>> in_labels(n);
  for (const OrbitEdge& e : o.weak_edges) in_labels[e.to].push_back(e.label);
  std::vector<int> colors;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v)
    if (in_labels[v].size() == 1) {
      mp.ji_nodes.push_back(v);
      colors.push_back(in_labels[v][0]);
      labels.push_back(weight_label(o.nodes[v]));
    }

  int m = static_cast<int>(mp.ji_nodes.size());
  if (m > max_poset_size) throw std::invalid_argument("poset too large");
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      leq[x][y] = mp.orbit_reach[mp.ji_nodes[y]][mp.ji_nodes[x]];
  mp.colored = ColoredPoset(
      Poset(m, hasse_edges(leq), std::move(labels)), std::move(colors));
  return mp;
}

CheckReport verify_minuscule_correspondence(const RootSystem& rs, int node) {
  CheckReport rep;
  rep.case_name = rs.name() + "/L" + std::to_string(node);
  MinusculePoset mp = build_minuscule_poset(rs, node);
  const WeightOrbit& o = mp.orbit;
  const ColoredPoset& cp = mp.colored;
  const Poset& p = cp.poset();
  int n = static_cast<int>(o.nodes.size());

  rep.add("orbit_minuscule", is_minuscule(o));
  rep.absorb(verify_orbit_structure(o), "orbit_");

  const auto& weak = mp.orbit_reach;
  rep.add("weak_equals_strong",
          weak == reachability(n, o.strong_edges));

  {
    std::set<std::pair<int, int>> edges, covers;
    for (const OrbitEdge& e : o.weak_edges) edges.insert({e.from, e.to});
    for (auto ab : hasse_edges(weak)) covers.insert(ab);
    rep.add("weak_edges_are_covers", edges == covers);
  }

  std::vector<Mask> image(n);
  for (int v = 0; v < n; ++v) image[v] = mp.filter_of(v);
  {
    auto filters = order_filters(p);
    std::set<Mask> want(filters.begin(), filters.end());
    std::set<Mask> got(image.begin(), image.end());
    rep.add("filters_bijective",
            got.size() == static_cast<std::size_t>(n) && got == want);
  }

  {
    bool pass = true;
    std::string wit;
    for (int a = 0; a < n && pass; ++a)
      for (int b = 0; b < n && pass; ++b)
        if (static_cast<bool>(weak[a][b]) !=
            ((image[a] & ~image[b]) == 0)) {
          pass = false;
          wit = std::to_string(a) + " vs " + std::to_string(b);
        }
    rep.add("order_isomorphism", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (const OrbitEdge& e : o.weak_edges) {
      Mask grow = image[e.to] & ~image[e.from];
      if ((image[e.from] & ~image[e.to]) != 0 || mask_count(grow) != 1 ||
          cp.color(mask_elements(grow)[0]) != e.label) {
        pass = false;
        wit = "edge " + std::to_string(e.from) + "->" + std::to_string(e.to);
        break;
      }
    }
    rep.add("edges_add_one_of_their_color", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (int v = 0; v < n && pass; ++v)
      for (int i = 1; i <= rs.rank() && pass; ++i) {
        int w = o.index_of(rs.simple_reflection(i, o.nodes[v]));
        if (w < 0 || color_toggle(cp, image[v], i) != image[w]) {
          pass = false;
          wit = "node " + std::to_string(v) + " i=" + std::to_string(i);
        }
      }
    rep.add("reflections_are_toggles", pass, wit);
  }

  {
    bool pass = true;
    for (int v = 0; v < n && pass; ++v)
      pass = mp.weight_of(image[v]) == o.nodes[v];
    rep.add("g_inverts_f", pass);
  }

  rep.add("poset_d_complete", is_d_complete(p));
  StructureReport sr = structure_report(p);
  rep.add("poset_connected", sr.connected);
  rep.add("poset_unique_max", sr.unique_max);
  rep.add("poset_self_dual", sr.self_dual);
  rep.add("maximum_has_weight_color",
          sr.unique_max && cp.color(p.maximal_elements()[0]) == node);

  {
    bool pass = false;
    try {
      std::vector<std::pair<int, int>> top;
      for (int x : mask_elements(top_tree(p))) top.emplace_back(x, cp.color(x));
      pass = derive_coloring(p, top).colors() == cp.colors();
    } catch (const std::invalid_argument&) {
    }
    rep.add("coloring_is_derived", pass);
  }

  {
    Mask t = sr.connected ? top_tree(p) : 0;
    auto tree = mask_elements(t);
    bool pass = static_cast<int>(tree.size()) == rs.rank();
    std::set<int> used;
    for (int x : tree) pass = pass && used.insert(cp.color(x)).second;
    std::set<std::pair<int, int>> tree_edges;
    for (auto [x, y] : p.covers())
      if (mask_contains(t, x) && mask_contains(t, y)) {
        tree_edges.insert({x, y});
        tree_edges.insert({y, x});
      }
    for (int x : tree)
      for (int y : tree) {
        if (x == y || !pass) continue;
        bool adj = rs.a(cp.color(x), cp.color(y)) != 0;
        if (adj != tree_edges.count({x, y})) pass = false;
      }
    rep.add("top_tree_is_dynkin", pass);
  }

  rep.absorb(verify_coloring_properties(cp), "coloring_");
  rep.absorb(verify_toggle_properties(cp, true), "");
  rep.absorb(verify_orders_coincide(cp), "");

  rep.add("orbit_size_is_group_index",
          static_cast<long long>(n) ==
              rs.weyl_order() / rs.stabilizer_order(o.lambda));

  return rep;
}

} // namespace dcfold
