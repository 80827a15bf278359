#include "dcfold/folding.hpp"

#include "dcfold/minuscule.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace dcfold {

std::vector<int> diagram_flip(const RootSystem& rs, bool rotate) {
  int n = rs.rank();
  std::vector<int> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (rotate) {
    if (rs.type() != LieType::D || n != 4)
      throw std::invalid_argument("only D_4 has a rotation");
    sigma[1] = 3;
    sigma[3] = 4;
    sigma[4] = 1;
    return sigma;
  }
  switch (rs.type()) {
  case LieType::A:
    if (n < 2) throw std::invalid_argument("A_1 has no non-trivial symmetry");
    for (int i = 1; i <= n; ++i) sigma[i] = n + 1 - i;
    break;
  case LieType::D:
    std::swap(sigma[n - 1], sigma[n]);
    break;
  case LieType::E:
    if (n != 6)
      throw std::invalid_argument(rs.name() + " has no non-trivial symmetry");
    std::swap(sigma[1], sigma[5]);
    std::swap(sigma[2], sigma[4]);
    break;
  default:
    throw std::invalid_argument(rs.name() + " is not simply laced");
  }
  return sigma;
}

Folding make_folding(const RootSystem& rs, const std::vector<int>& sigma) {
  if (rs.type() != LieType::A && rs.type() != LieType::D &&
      rs.type() != LieType::E)
    throw std::invalid_argument(rs.name() + " is not simply laced");
  int n = rs.rank();
  if (static_cast<int>(sigma.size()) != n + 1)
    throw std::invalid_argument("sigma must list images for nodes 1..rank");
  std::vector<char> hit(n + 1, 0);
  bool moved = false;
  for (int i = 1; i <= n; ++i) {
    if (sigma[i] < 1 || sigma[i] > n || hit[sigma[i]])
      throw std::invalid_argument("sigma is not a permutation of the nodes");
    hit[sigma[i]] = 1;
    moved |= sigma[i] != i;
  }
  if (!moved) throw std::invalid_argument("sigma fixes every node");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rs.a(sigma[i], sigma[j]) != rs.a(i, j))
        throw std::invalid_argument("sigma does not preserve the Cartan matrix");

  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orb;
    for (int j = i; orbit_of[j] < 0; j = sigma[j]) {
      orbit_of[j] = static_cast<int>(orbits.size());
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }

  int m = static_cast<int>(orbits.size());
  int longest = 1;
  std::vector<int> mult(m, 1);
  for (int p = 0; p < m; ++p) {
    longest = std::max(longest, static_cast<int>(orbits[p].size()));
    for (int i : orbits[p])
      for (int j : orbits[p])
        if (i != j && rs.a(i, j) != 0) mult[p] = 2;
  }

  // Pair the orbit coroot with one representative root of the other orbit;
  // the symmetry makes the representative immaterial.
  std::vector<std::vector<int>> folded(m, std::vector<int>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      bool got = false;
      for (int j : orbits[q]) {
        int sum = 0;
        for (int i : orbits[p]) sum += rs.a(i, j);
        sum *= mult[p];
        if (got && sum != folded[p][q])
          throw std::logic_error("folded pairing depends on the representative");
        folded[p][q] = sum;
        got = true;
      }
    }

  bool edge_orbit = std::any_of(mult.begin(), mult.end(),
                                [](int c) { return c == 2; });
  LieType ttype = LieType::B;
  switch (rs.type()) {
  case LieType::A: ttype = edge_orbit ? LieType::B : LieType::C; break;
  case LieType::D: ttype = longest == 3 ? LieType::G : LieType::B; break;
  default: ttype = LieType::F; break;
  }
  RootSystem target(ttype, m);

  std::vector<int> perm(m), found;
  std::iota(perm.begin(), perm.end(), 1);
  int hits = 0;
  do {
    bool ok = true;
    for (int p = 0; p < m && ok; ++p)
      for (int q = 0; q < m && ok; ++q)
        if (folded[p][q] != target.a(perm[p], perm[q])) ok = false;
    if (ok) {
      ++hits;
      found = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (hits != 1)
    throw std::logic_error("folded matrix admits " + std::to_string(hits) +
                           " numberings as " + target.name());

  std::vector<int> orbit_at(m + 1, -1);
  for (int p = 0; p < m; ++p) orbit_at[found[p]] = p;

  return Folding{rs,
                 std::move(target),
                 sigma,
                 std::move(orbits),
                 std::move(orbit_of),
                 std::move(mult),
                 std::move(folded),
                 std::move(found),
                 std::move(orbit_at)};
}

Weight restrict_weight(const Folding& fd, const Weight& mu) {
  if (static_cast<int>(mu.size()) != fd.source.rank())
    throw std::invalid_argument("weight rank does not match the source");
  Weight out(fd.target.rank(), 0);
  for (std::size_t p = 0; p < fd.orbits.size(); ++p) {
    int s = 0;
    for (int i : fd.orbits[p]) s += mu[i - 1];
    out[fd.target_node[p] - 1] = fd.weight_mult[p] * s;
  }
  return out;
}

namespace {

const std::vector<int>& orbit_for(const Folding& fd, int target_node) {
  if (target_node < 1 || target_node > fd.target.rank())
    throw std::invalid_argument("target node out of range");
  return fd.orbits[fd.orbit_at[target_node]];
}

} // namespace

Weight lifted_reflection(const Folding& fd, int target_node, const Weight& mu) {
  const std::vector<int>& orb = orbit_for(fd, target_node);
  Weight out = mu;
  if (fd.orthogonal_orbit(fd.orbit_at[target_node])) {
    for (int k : orb) out = fd.source.simple_reflection(k, out);
  } else {
    out = fd.source.simple_reflection(orb[0], out);
    out = fd.source.simple_reflection(orb[1], out);
    out = fd.source.simple_reflection(orb[0], out);
  }
  return out;
}

Mask composite_toggle(const Folding& fd, const ColoredPoset& cp, Mask f,
                      int target_node) {
  const std::vector<int>& orb = orbit_for(fd, target_node);
  if (fd.orthogonal_orbit(fd.orbit_at[target_node])) {
    for (int k : orb) f = color_toggle(cp, f, k);
  } else {
    f = color_toggle(cp, f, orb[0]);
    f = color_toggle(cp, f, orb[1]);
    f = color_toggle(cp, f, orb[0]);
  }
  return f;
}

std::vector<int> fold_colors(const Folding& fd, const ColoredPoset& cp) {
  std::vector<int> out(cp.poset().size());
  for (int x = 0; x < cp.poset().size(); ++x) {
    int c = cp.color(x);
    if (c < 1 || c > fd.source.rank())
      throw std::invalid_argument("element color is not a source node");
    out[x] = fd.target_node[fd.orbit_of[c]];
  }
  return out;
}

FoldedOrbit build_folded_orbit(Folding fd, const Weight& lambda) {
  WeightOrbit orbit = weyl_orbit(fd.target, restrict_weight(fd, lambda));
  int m = static_cast<int>(orbit.nodes.size());
  std::vector<Weight> lift(m);
  std::vector<char> have(m, 0);
  lift[0] = lambda;
  have[0] = 1;
  // Weak edges lead away from the seed, so one pass fills every lift; the
  // extra fixed-point round re-checks each edge against both endpoints.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const OrbitEdge& e : orbit.weak_edges) {
      if (!have[e.from]) continue;
      Weight w = lifted_reflection(fd, e.label, lift[e.from]);
      if (!have[e.to]) {
        lift[e.to] = std::move(w);
        have[e.to] = 1;
        grew = true;
      } else if (lift[e.to] != w) {
        throw std::logic_error("two paths lift one folded weight differently");
      }
    }
  }
  for (int k = 0; k < m; ++k) {
    if (!have[k]) throw std::logic_error("folded orbit node was never lifted");
    if (restrict_weight(fd, lift[k]) != orbit.nodes[k])
      throw std::logic_error("lift does not restrict to its folded weight");
  }
  return FoldedOrbit{std::move(fd), std::move(orbit), std::move(lift)};
}

CheckReport verify_folded_isomorphism(const RootSystem& rs, int weight_node,
                                      const std::vector<int>& sigma) {
  MinusculePoset mp = build_minuscule_poset(rs, weight_node);
  Folding fd = make_folding(rs, sigma);

  CheckReport rep;
  rep.case_name =
      rs.name() + "/L" + std::to_string(weight_node) + "->" + fd.target.name();

  const ColoredPoset& cp = mp.colored;
  const Poset& P = cp.poset();
  ColoredPoset fold_cp(P, fold_colors(fd, cp));
  int rank_t = fd.target.rank();

  std::string map_note = fd.target.name();
  for (std::size_t p = 0; p < fd.orbits.size(); ++p) {
    map_note += " {";
    for (std::size_t k = 0; k < fd.orbits[p].size(); ++k)
      map_note += (k ? "," : "") + std::to_string(fd.orbits[p][k]);
    map_note += "}->" + std::to_string(fd.target_node[p]);
  }
  rep.add("folded_matrix_standard", true, map_note);

  bool pass = true;
  std::string wit;
  for (int i = 1; i <= rs.rank() && pass; ++i) {
    int p = fd.orbit_of[i];
    Weight want = fd.target.fundamental_weight(fd.target_node[p]);
    for (int& v : want) v *= fd.weight_mult[p];
    if (restrict_weight(fd, rs.fundamental_weight(i)) != want) {
      pass = false;
      wit = "i=" + std::to_string(i);
    }
  }
  rep.add("fundamental_weights_restrict", pass, wit);

  int src_n = static_cast<int>(mp.orbit.nodes.size());
  pass = true;
  wit.clear();
  for (int k = 0; k < src_n && pass; ++k)
    for (int t = 1; t <= rank_t && pass; ++t) {
      Weight via_src =
          restrict_weight(fd, lifted_reflection(fd, t, mp.orbit.nodes[k]));
      Weight via_tgt = fd.target.simple_reflection(
          t, restrict_weight(fd, mp.orbit.nodes[k]));
      if (via_src != via_tgt) {
        pass = false;
        wit = "mu=" + std::to_string(k) + " p=" + std::to_string(t);
      }
    }
  rep.add("reflection_commutes_with_restriction", pass, wit);

  std::optional<FoldedOrbit> fo;
  wit.clear();
  try {
    fo.emplace(build_folded_orbit(fd, mp.orbit.lambda));
  } catch (const std::logic_error& e) {
    wit = e.what();
  }
  rep.add("lifts_well_defined", fo.has_value(), wit);
  if (!fo) return rep;
  int fold_n = static_cast<int>(fo->orbit.nodes.size());

  // The subgroup fixed by the symmetry acts through the composite
  // reflections; its orbit of lambda must be exactly the lifts.
  std::set<int> hat{0};
  std::queue<int> bfs;
  bfs.push(0);
  bool closed = true;
  while (!bfs.empty()) {
    int k = bfs.front();
    bfs.pop();
    for (int t = 1; t <= rank_t; ++t) {
      int j = mp.orbit.index_of(lifted_reflection(fd, t, mp.orbit.nodes[k]));
      if (j < 0) {
        closed = false;
        continue;
      }
      if (hat.insert(j).second) bfs.push(j);
    }
  }
  std::vector<int> src_of(fold_n, -1);
  std::set<int> lifted;
  for (int k = 0; k < fold_n; ++k) {
    src_of[k] = mp.orbit.index_of(fo->lift[k]);
    lifted.insert(src_of[k]);
  }
  bool inj = !lifted.count(-1) &&
             static_cast<int>(lifted.size()) == fold_n;
  rep.add("restriction_injective", inj,
          inj ? "" : "repeated or missing lift");
  rep.add("fixed_subgroup_orbit_matches", closed && hat == lifted,
          closed ? "" : "reflection left the orbit");
  if (!inj) return rep;

  pass = true;
  wit.clear();
  for (int k = 0; k < fold_n && pass; ++k)
    for (std::size_t p = 0; p < fd.orbits.size() && pass; ++p) {
      bool pos = false, neg = false;
      for (int i : fd.orbits[p]) {
        pos |= fo->lift[k][i - 1] > 0;
        neg |= fo->lift[k][i - 1] < 0;
      }
      if (pos && neg) {
        pass = false;
        wit = "nu=" + std::to_string(k) + " p=" + std::to_string(p);
      }
    }
  rep.add("orbit_pairings_one_sign", pass, wit);

  pass = true;
  wit.clear();
  for (int k = 0; k < fold_n && pass; ++k)
    for (int t = 1; t <= rank_t && pass; ++t) {
      const Weight& w = fo->lift[k];
      int a = src_of[k];
      int b = mp.orbit.index_of(lifted_reflection(fd, t, w));
      int sign = 0;
      for (int i : orbit_for(fd, t)) sign += w[i - 1];
      bool ok = sign > 0   ? b != a && mp.orbit_reach[a][b]
                : sign < 0 ? b != a && mp.orbit_reach[b][a]
                           : b == a;
      if (!ok) {
        pass = false;
        wit = "nu=" + std::to_string(k) + " p=" + std::to_string(t);
      }
    }
  rep.add("lifted_reflection_climbs", pass, wit);

  auto src_strong = reachability(src_n, mp.orbit.strong_edges);
  auto tgt_strong = reachability(fold_n, fo->orbit.strong_edges);
  auto tgt_weak = reachability(fold_n, fo->orbit.weak_edges);
  pass = true;
  wit.clear();
  for (int a = 0; a < fold_n && pass; ++a)
    for (int b = 0; b < fold_n && pass; ++b)
      if (static_cast<bool>(tgt_strong[a][b]) !=
          static_cast<bool>(src_strong[src_of[a]][src_of[b]])) {
        pass = false;
        wit = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
  rep.add("strong_order_matches_source", pass, wit);

  auto filters = order_filters(P);
  pass = true;
  wit.clear();
  for (Mask f : filters)
    for (int t = 1; t <= rank_t && pass; ++t) {
      std::vector<int> orb = orbit_for(fd, t);
      Mask want = composite_toggle(fd, cp, f, t);
      if (fd.orthogonal_orbit(fd.orbit_at[t])) {
        std::sort(orb.begin(), orb.end());
        do {
          Mask g = f;
          for (int k : orb) g = color_toggle(cp, g, k);
          if (g != want) pass = false;
        } while (pass && std::next_permutation(orb.begin(), orb.end()));
      } else {
        Mask g = color_toggle(cp, f, orb[1]);
        g = color_toggle(cp, g, orb[0]);
        g = color_toggle(cp, g, orb[1]);
        if (g != want) pass = false;
      }
      if (!pass) wit = "f=" + std::to_string(f) + " p=" + std::to_string(t);
    }
  rep.add("composite_toggle_order_free", pass, wit);

  pass = true;
  wit.clear();
  for (Mask f : filters)
    for (int t = 1; t <= rank_t && pass; ++t)
      if (color_toggle(fold_cp, f, t) != composite_toggle(fd, cp, f, t)) {
        pass = false;
        wit = "f=" + std::to_string(f) + " p=" + std::to_string(t);
      }
  rep.add("folded_toggle_equals_composite", pass, wit);

  rep.absorb(verify_toggle_properties(fold_cp, false), "folded_");

  std::vector<Mask> image(fold_n);
  for (int k = 0; k < fold_n; ++k) image[k] = mp.filter_of(src_of[k]);
  std::set<Mask> img_set(image.begin(), image.end());
  rep.add("folded_map_injective",
          static_cast<int>(img_set.size()) == fold_n, "");

  auto closure = toggle_closure(fold_cp, 0);
  rep.add("folded_filters_are_toggle_closure",
          img_set == std::set<Mask>(closure.begin(), closure.end()),
          "closure size " + std::to_string(closure.size()));

  pass = true;
  wit.clear();
  for (int k = 0; k < fold_n && pass; ++k)
    for (int t = 1; t <= rank_t && pass; ++t) {
      int j = fo->orbit.index_of(
          fd.target.simple_reflection(t, fo->orbit.nodes[k]));
      if (j < 0 || image[j] != color_toggle(fold_cp, image[k], t)) {
        pass = false;
        wit = "nu=" + std::to_string(k) + " p=" + std::to_string(t);
      }
    }
  rep.add("reflections_are_toggles", pass, wit);

  bool coeff_ok = true, height_ok = true;
  wit.clear();
  std::string hwit;
  for (int k = 0; k < fold_n; ++k) {
    for (int t = 1; t <= rank_t; ++t) {
      int count = mask_count(image[k] & fold_cp.color_class(t));
      if (fo->orbit.coeffs[k][t - 1] != count && coeff_ok) {
        coeff_ok = false;
        wit = "nu=" + std::to_string(k) + " p=" + std::to_string(t);
      }
    }
    if (fo->orbit.height[k] != mask_count(image[k]) && height_ok) {
      height_ok = false;
      hwit = "nu=" + std::to_string(k);
    }
  }
  rep.add("coefficients_count_colors", coeff_ok, wit);
  rep.add("height_is_filter_size", height_ok, hwit);

  pass = true;
  wit.clear();
  for (int k = 0; k < fold_n && pass; ++k) {
    Weight g = restrict_weight(fd, mp.orbit.lambda);
    for (int x : mask_elements(image[k])) {
      Weight beta = fd.target.simple_root(fold_cp.color(x));
      for (int t = 0; t < rank_t; ++t) g[t] -= beta[t];
    }
    if (g != fo->orbit.nodes[k]) {
      pass = false;
      wit = "nu=" + std::to_string(k);
    }
  }
  rep.add("g_inverts_folded_map", pass, wit);

  // Reachability through strictly growing folded toggles, within the
  // folded filter set.
  std::unordered_map<Mask, int> at;
  for (int k = 0; k < fold_n; ++k) at[image[k]] = k;
  std::vector<std::vector<int>> next(fold_n);
  bool stays = true;
  for (int k = 0; k < fold_n; ++k)
    for (int t = 1; t <= rank_t; ++t) {
      Mask s = color_toggle(fold_cp, image[k], t);
      if ((s & ~image[k]) == 0 || (image[k] & ~s) != 0) continue;
      auto it = at.find(s);
      if (it == at.end()) {
        stays = false;
        continue;
      }
      next[k].push_back(it->second);
    }
  std::vector<std::vector<char>> tri(fold_n, std::vector<char>(fold_n, 0));
  for (int k = 0; k < fold_n; ++k) {
    tri[k][k] = 1;
    std::queue<int> q;
    q.push(k);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : next[a])
        if (!tri[k][b]) {
          tri[k][b] = 1;
          q.push(b);
        }
    }
  }
  pass = stays;
  wit = stays ? "" : "toggle left the folded filter set";
  for (int a = 0; a < fold_n && pass; ++a)
    for (int b = 0; b < fold_n && pass; ++b)
      if (static_cast<bool>(tgt_weak[a][b]) != static_cast<bool>(tri[a][b])) {
        pass = false;
        wit = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
  rep.add("weak_order_is_toggle_order", pass, wit);

  pass = true;
  wit.clear();
  for (int a = 0; a < fold_n && pass; ++a)
    for (int b = 0; b < fold_n && pass; ++b) {
      bool sub = (image[a] & ~image[b]) == 0;
      if (static_cast<bool>(tgt_strong[a][b]) != sub) {
        pass = false;
        wit = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
    }
  rep.add("strong_order_is_containment", pass, wit);

  std::string note = "none";
  for (int a = 0; a < fold_n && note == "none"; ++a)
    for (int b = 0; b < fold_n && note == "none"; ++b)
      if (a != b && (image[a] & ~image[b]) == 0 && !tri[a][b])
        note = "a=" + std::to_string(a) + " b=" + std::to_string(b);
  rep.add("subset_vs_toggle_gap", true, note);

  return rep;
}

} // namespace dcfold
