#include "dcfold/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace dcfold {

int mask_count(Mask m) { return std::popcount(m); }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    int x = std::countr_zero(m);
    out.push_back(x);
    m &= m - 1;
  }
  return out;
}

static Mask full_mask(int n) {
  return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// ---- construction -------------------------------------------------------

Poset::Poset(int n, std::vector<std::pair<int, int>> covers,
             std::vector<std::string> labels)
    : n_(n), covers_(std::move(covers)), labels_(std::move(labels)) {
  if (n < 0 || n > max_poset_size)
    throw std::invalid_argument("poset size out of range");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int x = 0; x < n_; ++x) labels_.push_back(std::to_string(x));
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match poset size");

  uc_.assign(n_, {});
  lc_.assign(n_, {});
  std::sort(covers_.begin(), covers_.end());
  for (std::size_t e = 0; e < covers_.size(); ++e) {
    auto [x, y] = covers_[e];
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || x == y)
      throw std::invalid_argument("bad cover pair");
    if (e > 0 && covers_[e] == covers_[e - 1])
      throw std::invalid_argument("duplicate cover pair");
    uc_[x].push_back(y);
    lc_[y].push_back(x);
  }

  // Reverse topological pass; failure to exhaust the queue means a cycle.
  std::vector<int> order, outdeg(n_);
  std::queue<int> q;
  for (int x = 0; x < n_; ++x) {
    outdeg[x] = static_cast<int>(uc_[x].size());
    if (outdeg[x] == 0) q.push(x);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    order.push_back(x);
    for (int y : lc_[x])
      if (--outdeg[y] == 0) q.push(y);
  }
  if (static_cast<int>(order.size()) != n_)
    throw std::invalid_argument("cover relation contains a cycle");

  up_.assign(n_, 0);
  down_.assign(n_, 0);
  for (int x : order) {
    up_[x] = mask_bit(x);
    for (int y : uc_[x]) up_[x] |= up_[y];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    down_[*it] = mask_bit(*it);
    for (int y : lc_[*it]) down_[*it] |= down_[y];
  }

  // With the closure known, every listed cover must be a genuine cover.
  for (auto [x, y] : covers_)
    if (interval(x, y) != (mask_bit(x) | mask_bit(y)))
      throw std::invalid_argument("cover list is not transitively reduced");
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (uc_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (lc_[x].empty()) out.push_back(x);
  return out;
}

bool Poset::is_filter(Mask f) const {
  if (f & ~full_mask(n_)) return false;
  for (auto [x, y] : covers_)
    if (mask_contains(f, x) && !mask_contains(f, y)) return false;
  return true;
}

// ---- concrete families ---------------------------------------------------

Poset young_rect(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("young_rect needs m, n >= 1");
  if (m * n > max_poset_size) throw std::invalid_argument("young_rect too large");
  auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i > 1) covers.emplace_back(id(i, j), id(i - 1, j));
      if (j > 1) covers.emplace_back(id(i, j), id(i, j - 1));
    }
  return Poset(m * n, std::move(covers), std::move(labels));
}

Poset shifted_young(int n) {
  if (n < 1) throw std::invalid_argument("shifted_young needs n >= 1");
  if (n * (n + 1) / 2 > max_poset_size)
    throw std::invalid_argument("shifted_young too large");
  std::map<std::pair<int, int>, int> id;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id[{i, j}] = static_cast<int>(labels.size());
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  std::vector<std::pair<int, int>> covers;
  for (auto [cell, x] : id) {
    auto [i, j] = cell;
    if (id.count({i - 1, j})) covers.emplace_back(x, id[{i - 1, j}]);
    if (id.count({i, j - 1})) covers.emplace_back(x, id[{i, j - 1}]);
  }
  int count = static_cast<int>(labels.size());
  return Poset(count, std::move(covers), std::move(labels));
}

Poset double_tailed(int k, bool minus) {
  if (k < 3 || (minus && k < 4))
    throw std::invalid_argument("double_tailed needs k >= 3 (k >= 4 with minus)");
  int t = k - 2;               // tail length
  int top = minus ? t - 1 : t; // elements above the incomparable pair
  int n = t + 2 + top;
  if (n > max_poset_size) throw std::invalid_argument("double_tailed too large");
  std::vector<std::string> labels;
  for (int a = 0; a < t; ++a) labels.push_back("w" + std::to_string(k - a));
  labels.push_back("x");
  labels.push_back("y");
  for (int a = 0; a < top; ++a) labels.push_back("z" + std::to_string(3 + a));
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a + 1 < t; ++a) covers.emplace_back(a, a + 1);
  covers.emplace_back(t - 1, t);
  covers.emplace_back(t - 1, t + 1);
  if (top > 0) {
    covers.emplace_back(t, t + 2);
    covers.emplace_back(t + 1, t + 2);
    for (int a = 0; a + 1 < top; ++a)
      covers.emplace_back(t + 2 + a, t + 3 + a);
  }
  return Poset(n, std::move(covers), std::move(labels));
}

// ---- order filters -------------------------------------------------------

std::vector<Mask> order_filters(const Poset& p) {
  std::unordered_set<Mask> seen{0};
  std::queue<Mask> q;
  q.push(0);
  while (!q.empty()) {
    Mask f = q.front();
    q.pop();
    for (int x = 0; x < p.size(); ++x) {
      if (mask_contains(f, x)) continue;
      bool addable = true; // x must be maximal in the complement
      for (int y : p.upper_covers(x))
        if (!mask_contains(f, y)) {
          addable = false;
          break;
        }
      if (addable && seen.insert(f | mask_bit(x)).second)
        q.push(f | mask_bit(x));
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

std::vector<Mask> order_filters_by_scan(const Poset& p) {
  if (p.size() > 20)
    throw std::invalid_argument("subset scan is limited to 20 elements");
  std::vector<Mask> out;
  for (Mask f = 0; f <= full_mask(p.size()); ++f) {
    if (p.is_filter(f)) out.push_back(f);
    if (f == full_mask(p.size())) break;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

// ---- interval classification ---------------------------------------------

IntervalClass classify_interval(const Poset& p, int x, int y) {
  if (x == y || !p.leq(x, y)) return {};
  Mask iv = p.interval(x, y);
  if (mask_count(iv) < 4) return {};
  auto el = mask_elements(iv);
  int u = -1, v = -1, pairs = 0;
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b)
      if (!p.leq(el[a], el[b]) && !p.leq(el[b], el[a])) {
        ++pairs;
        u = el[a];
        v = el[b];
      }
  if (pairs != 1) return {};
  Mask below = (p.down_set(u) & iv) ^ mask_bit(u);
  Mask above = (p.up_set(u) & iv) ^ mask_bit(u);
  if (((p.down_set(v) & iv) ^ mask_bit(v)) != below) return {};
  if (((p.up_set(v) & iv) ^ mask_bit(v)) != above) return {};
  if ((below | above | mask_bit(u) | mask_bit(v)) != iv) return {};
  int nb = mask_count(below), na = mask_count(above);
  if (nb < 1) return {};
  if (na == nb) return {IntervalShape::diamond, nb + 2};
  if (na == nb - 1 && nb >= 2) return {IntervalShape::diamond_minus, nb + 2};
  return {};
}

std::vector<std::pair<int, int>> completing_tops(const Poset& p, int w) {
  std::vector<std::pair<int, int>> out;
  for (int z : mask_elements(p.up_set(w) ^ mask_bit(w))) {
    IntervalClass c = classify_interval(p, w, z);
    if (c.shape == IntervalShape::diamond) out.emplace_back(z, c.k);
  }
  return out;
}

// ---- completeness axioms ---------------------------------------------------

DCompleteReport d_complete_report(const Poset& p) {
  DCompleteReport rep;
  auto violate = [&rep](int axiom, std::vector<int> el) {
    rep.ok = false;
    rep.violations.push_back({axiom, std::move(el)});
  };

  // Incomplete configurations are grouped by their top part for axiom 3.
  std::map<Mask, std::vector<int>> tails;

  for (int w = 0; w < p.size(); ++w) {
    const auto& uc = p.upper_covers(w);
    for (std::size_t a = 0; a < uc.size(); ++a)
      for (std::size_t b = a + 1; b < uc.size(); ++b) {
        int x = uc[a], y = uc[b];
        bool complete = false;
        for (int z : p.upper_covers(x))
          if (p.leq(y, z) &&
              p.interval(w, z) ==
                  (mask_bit(w) | mask_bit(x) | mask_bit(y) | mask_bit(z))) {
            complete = true;
            break;
          }
        if (!complete) violate(1, {w, x, y});
        tails[mask_bit(x) | mask_bit(y)].push_back(w);
      }
  }

  for (int x = 0; x < p.size(); ++x)
    for (int y : mask_elements(p.up_set(x) ^ mask_bit(x))) {
      IntervalClass c = classify_interval(p, x, y);
      if (c.shape == IntervalShape::diamond) {
        Mask iv = p.interval(x, y);
        for (int u : p.lower_covers(y))
          if (!mask_contains(iv, u)) violate(2, {x, y, u});
      } else if (c.shape == IntervalShape::diamond_minus) {
        Mask iv = p.interval(x, y);
        bool complete = false;
        for (int z : p.upper_covers(y)) {
          IntervalClass cz = classify_interval(p, x, z);
          if (cz.shape == IntervalShape::diamond && cz.k == c.k &&
              p.interval(x, z) == (iv | mask_bit(z))) {
            complete = true;
            break;
          }
        }
        if (!complete) violate(1, mask_elements(iv));
        tails[iv ^ mask_bit(x)].push_back(x);
      }
    }

  for (const auto& [tail, mins] : tails)
    if (mins.size() > 1) {
      std::vector<int> el = mins;
      for (int t : mask_elements(tail)) el.push_back(t);
      violate(3, std::move(el));
    }

  return rep;
}

bool is_d_complete(const Poset& p) { return d_complete_report(p).ok; }

Mask top_tree(const Poset& p) {
  if (!is_connected(p)) throw std::invalid_argument("top_tree needs a connected poset");
  Mask t = 0;
  for (int x = 0; x < p.size(); ++x) {
    bool in = true;
    for (int y : mask_elements(p.up_set(x)))
      if (p.upper_covers(y).size() > 1) {
        in = false;
        break;
      }
    if (in) t |= mask_bit(x);
  }
  return t;
}

// ---- structural checks and isomorphism --------------------------------------

bool is_connected(const Poset& p) {
  if (p.size() == 0) return true;
  std::vector<char> vis(p.size(), 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int found = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    auto step = [&](int y) {
      if (!vis[y]) {
        vis[y] = 1;
        ++found;
        q.push(y);
      }
    };
    for (int y : p.upper_covers(x)) step(y);
    for (int y : p.lower_covers(x)) step(y);
  }
  return found == p.size();
}

Poset dual(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  covers.reserve(p.covers().size());
  for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
  std::vector<std::string> labels;
  labels.reserve(p.size());
  for (int x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
  return Poset(p.size(), std::move(covers), std::move(labels));
}

namespace {

// Backtracking matcher shared by the poset and digraph isomorphism tests.
// consistent(x, y, x2, y2) decides whether mapping x -> y is compatible
// with an already placed pair x2 -> y2.
template <class Sig, class Consistent>
bool match(int n, const std::vector<Sig>& sa, const std::vector<Sig>& sb,
           Consistent consistent) {
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
  }
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sa[x] == sb[y]) cand[x].push_back(y);
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&cand](int a, int b) {
    return cand[a].size() < cand[b].size();
  });
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int x = order[pos];
    for (int y : cand[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q)
        ok = consistent(x, y, order[q], image[order[q]]);
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (self(self, pos + 1)) return true;
      image[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  using Sig = std::array<int, 4>;
  auto sigs = [](const Poset& p) {
    std::vector<Sig> s(p.size());
    for (int x = 0; x < p.size(); ++x)
      s[x] = {mask_count(p.down_set(x)), mask_count(p.up_set(x)),
              static_cast<int>(p.lower_covers(x).size()),
              static_cast<int>(p.upper_covers(x).size())};
    return s;
  };
  return match(n, sigs(a), sigs(b), [&a, &b](int x, int y, int x2, int y2) {
    return a.leq(x, x2) == b.leq(y, y2) && a.leq(x2, x) == b.leq(y2, y);
  });
}

bool digraph_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                        int n2, const std::vector<std::pair<int, int>>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  auto adj = [](int n, const std::vector<std::pair<int, int>>& es) {
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (auto [x, y] : es) m[x][y] = 1;
    return m;
  };
  auto m1 = adj(n1, e1), m2 = adj(n2, e2);
  using Sig = std::pair<int, int>;
  auto sigs = [](int n, const std::vector<std::vector<char>>& m) {
    std::vector<Sig> s(n, {0, 0});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        s[x].second += m[x][y];
        s[y].first += m[x][y];
      }
    return s;
  };
  return match(n1, sigs(n1, m1), sigs(n2, m2),
               [&m1, &m2](int x, int y, int x2, int y2) {
                 return m1[x][x2] == m2[y][y2] && m1[x2][x] == m2[y2][y];
               });
}

StructureReport structure_report(const Poset& p) {
  StructureReport r;
  r.connected = is_connected(p);
  r.unique_max = p.maximal_elements().size() == 1;
  r.self_dual = poset_isomorphic(p, dual(p));
  return r;
}

} // namespace dcfold
