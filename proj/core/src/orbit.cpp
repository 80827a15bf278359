#include "dcfold/orbit.hpp"

#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace dcfold {

int WeightOrbit::index_of(const Weight& mu) const {
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (nodes[v] == mu) return static_cast<int>(v);
  return -1;
}

WeightOrbit weyl_orbit(const RootSystem& rs, const Weight& dominant) {
  if (static_cast<int>(dominant.size()) != rs.rank())
    throw std::invalid_argument("weight rank mismatch");
  for (int v : dominant)
    if (v < 0) throw std::invalid_argument("weight is not dominant");

  WeightOrbit o{rs, dominant, {}, {}, {}, {}, {}};
  std::map<Weight, int> index;
  auto intern = [&o, &index](const Weight& mu, std::vector<int> c) {
    auto [it, fresh] = index.try_emplace(mu, static_cast<int>(o.nodes.size()));
    if (fresh) {
      o.nodes.push_back(mu);
      int h = 0;
      for (int v : c) h += v;
      o.coeffs.push_back(std::move(c));
      o.height.push_back(h);
    }
    return it->second;
  };

  intern(dominant, std::vector<int>(rs.rank(), 0));
  for (int v = 0; v < static_cast<int>(o.nodes.size()); ++v) {
    Weight mu = o.nodes[v];
    for (int i = 1; i <= rs.rank(); ++i) {
      int pair = mu[i - 1];
      if (pair <= 0) continue;
      auto c = o.coeffs[v];
      c[i - 1] += pair;
      int w = intern(rs.simple_reflection(i, mu), std::move(c));
      o.weak_edges.push_back({v, w, i});
    }
  }

  auto roots = rs.positive_roots();
  for (int v = 0; v < static_cast<int>(o.nodes.size()); ++v)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      int pair = rs.pairing(o.nodes[v], roots[b]);
      if (pair <= 0) continue;
      Weight nu = rs.reflect(o.nodes[v], roots[b]);
      auto it = index.find(nu);
      if (it == index.end())
        throw std::logic_error("reflection left the orbit");
      // lambda - s_beta(mu) = (lambda - mu) + pair * beta; both sides were
      // computed independently, so compare them.
      for (int j = 0; j < rs.rank(); ++j)
        if (o.coeffs[it->second][j] !=
            o.coeffs[v][j] + pair * roots[b].simple[j])
          throw std::logic_error("root coefficients disagree");
      o.strong_edges.push_back({v, it->second, static_cast<int>(b)});
    }

  return o;
}

bool is_minuscule(const WeightOrbit& o) {
  for (const Weight& mu : o.nodes)
    for (int v : mu)
      if (v < -1 || v > 1) return false;
  return true;
}

bool is_minuscule_weight(const RootSystem& rs, const Weight& dominant) {
  for (int v : dominant)
    if (v < 0) throw std::invalid_argument("weight is not dominant");
  for (const auto& beta : rs.positive_roots())
    if (rs.pairing(dominant, beta) > 1) return false;
  return true;
}

std::vector<std::vector<char>> reachability(
    int n, const std::vector<OrbitEdge>& edges) {
  std::vector<std::vector<int>> next(n);
  for (const OrbitEdge& e : edges) next[e.from].push_back(e.to);
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    reach[s][s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : next[v])
        if (!reach[s][w]) {
          reach[s][w] = 1;
          q.push(w);
        }
    }
  }
  return reach;
}

std::vector<std::pair<int, int>> hasse_edges(
    const std::vector<std::vector<char>>& reach) {
  int n = static_cast<int>(reach.size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !reach[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && reach[a][c] && reach[c][b]) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

CheckReport verify_orbit_structure(const WeightOrbit& o) {
  CheckReport rep;
  rep.case_name = o.rs.name();
  int n = static_cast<int>(o.nodes.size());

  bool dom = true;
  for (int v : o.lambda)
    if (v < 0) dom = false;
  rep.add("source_dominant", dom);

  auto weak = reachability(n, o.weak_edges);
  bool all = true;
  std::string wit;
  for (int v = 0; v < n && all; ++v)
    if (!weak[0][v]) {
      all = false;
      wit = "node " + std::to_string(v);
    }
  rep.add("source_reaches_all", all, wit);

  bool climbs = true;
  wit.clear();
  for (const OrbitEdge& e : o.weak_edges) {
    int pair = o.nodes[e.from][e.label - 1];
    if (o.height[e.to] - o.height[e.from] != pair) {
      climbs = false;
      wit = "edge " + std::to_string(e.from) + "->" + std::to_string(e.to);
      break;
    }
  }
  rep.add("edges_climb_by_pairing", climbs, wit);

  auto strong = reachability(n, o.strong_edges);
  bool sub = true;
  wit.clear();
  for (int a = 0; a < n && sub; ++a)
    for (int b = 0; b < n && sub; ++b)
      if (weak[a][b] && !strong[a][b]) {
        sub = false;
        wit = std::to_string(a) + " -> " + std::to_string(b);
      }
  rep.add("weak_within_strong", sub, wit);

  return rep;
}

} // namespace dcfold
