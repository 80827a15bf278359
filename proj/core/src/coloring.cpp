#include "dcfold/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace dcfold {

ColoredPoset::ColoredPoset(Poset p, std::vector<int> colors)
    : p_(std::move(p)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != p_.size())
    throw std::invalid_argument("color count does not match poset size");
  for (int c : colors_) {
    if (c < 1) throw std::invalid_argument("colors must be >= 1");
    max_color_ = std::max(max_color_, c);
  }
  classes_.assign(max_color_ + 1, 0);
  for (int x = 0; x < p_.size(); ++x) classes_[colors_[x]] |= mask_bit(x);
}

ColoredPoset derive_coloring(const Poset& p,
                             const std::vector<std::pair<int, int>>& top_colors) {
  Mask tree = top_tree(p);
  std::vector<int> colors(p.size(), 0);
  Mask assigned = 0;
  std::set<int> used;
  for (auto [x, c] : top_colors) {
    if (x < 0 || x >= p.size() || !mask_contains(tree, x))
      throw std::invalid_argument("top color names a non-tree element");
    if (c < 1) throw std::invalid_argument("colors must be >= 1");
    if (mask_contains(assigned, x))
      throw std::invalid_argument("top-tree element colored twice");
    if (!used.insert(c).second)
      throw std::invalid_argument("top-tree colors must be distinct");
    assigned |= mask_bit(x);
    colors[x] = c;
  }
  if (assigned != tree)
    throw std::invalid_argument("top tree is not fully colored");

  // Sweep from the maximum down; every interval top lies strictly above its
  // minimum, so tops are always colored first.
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&p](int a, int b) {
    return mask_count(p.up_set(a)) < mask_count(p.up_set(b));
  });
  for (int x : order) {
    if (colors[x]) continue;
    int got = 0;
    for (auto [z, k] : completing_tops(p, x)) {
      if (got && got != colors[z])
        throw std::invalid_argument("interval tops above one element disagree");
      got = colors[z];
    }
    if (!got)
      throw std::invalid_argument("element below the top tree starts no interval");
    colors[x] = got;
  }
  return ColoredPoset(p, std::move(colors));
}

CheckReport verify_coloring_properties(const ColoredPoset& cp) {
  const Poset& p = cp.poset();
  CheckReport rep;
  rep.case_name = "coloring";
  auto tag = [](int x, int y) {
    return "x=" + std::to_string(x) + " y=" + std::to_string(y);
  };

  bool pass = true;
  std::string wit;
  for (auto [x, y] : p.covers())
    if (cp.color(x) == cp.color(y) && pass) {
      pass = false;
      wit = tag(x, y);
    }
  rep.add("covers_distinct", pass, wit);

  pass = true;
  wit.clear();
  for (int x = 0; x < p.size() && pass; ++x)
    for (int y = x + 1; y < p.size() && pass; ++y)
      if (!p.leq(x, y) && !p.leq(y, x) && cp.color(x) == cp.color(y)) {
        pass = false;
        wit = tag(x, y);
      }
  rep.add("incomparable_distinct", pass, wit);

  // Same color on a chain interval would repeat a color inside it.
  pass = true;
  wit.clear();
  for (int x = 0; x < p.size() && pass; ++x)
    for (int y = 0; y < p.size() && pass; ++y) {
      if (x == y || !p.leq(x, y) || cp.color(x) != cp.color(y)) continue;
      auto el = mask_elements(p.interval(x, y));
      bool chain = true;
      for (std::size_t a = 0; a < el.size() && chain; ++a)
        for (std::size_t b = a + 1; b < el.size() && chain; ++b)
          if (!p.leq(el[a], el[b]) && !p.leq(el[b], el[a])) chain = false;
      if (chain) {
        pass = false;
        wit = tag(x, y);
      }
    }
  rep.add("chain_intervals_distinct", pass, wit);

  pass = true;
  wit.clear();
  for (int c = 1; c <= cp.max_color() && pass; ++c) {
    auto el = mask_elements(cp.color_class(c));
    for (std::size_t a = 0; a < el.size() && pass; ++a)
      for (std::size_t b = a + 1; b < el.size() && pass; ++b)
        if (!p.leq(el[a], el[b]) && !p.leq(el[b], el[a])) {
          pass = false;
          wit = "c=" + std::to_string(c);
        }
  }
  rep.add("classes_are_chains", pass, wit);

  pass = true;
  wit.clear();
  for (int x = 0; x < p.size() && pass; ++x)
    for (auto [z, k] : completing_tops(p, x))
      if (cp.color(x) != cp.color(z)) {
        pass = false;
        wit = tag(x, z);
        break;
      }
  rep.add("diamond_ends_match", pass, wit);

  return rep;
}

Mask color_extend(const ColoredPoset& cp, Mask f, int c) {
  const Poset& p = cp.poset();
  Mask cls = c <= cp.max_color() ? cp.color_class(c) : 0;
  Mask out = f;
  for (int x = 0; x < p.size(); ++x) {
    if (mask_contains(f, x)) continue;
    // x joins when everything above it that is still missing has color c.
    if ((p.up_set(x) & ~f & ~cls) == 0) out |= mask_bit(x);
  }
  return out;
}

Mask color_retract(const ColoredPoset& cp, Mask f, int c) {
  const Poset& p = cp.poset();
  Mask cls = c <= cp.max_color() ? cp.color_class(c) : 0;
  Mask out = f;
  for (int x = 0; x < p.size(); ++x) {
    if (!mask_contains(f, x)) continue;
    // x leaves when everything below it inside the filter has color c.
    if ((p.down_set(x) & f & ~cls) == 0) out &= ~mask_bit(x);
  }
  return out;
}

Mask color_toggle(const ColoredPoset& cp, Mask f, int c) {
  Mask s = (color_extend(cp, f, c) & ~f) | color_retract(cp, f, c);
  return cp.poset().is_filter(s) ? s : f;
}

Mask color_extend_by_scan(const ColoredPoset& cp, Mask f, int c) {
  Mask cls = c <= cp.max_color() ? cp.color_class(c) : 0;
  Mask out = f;
  for (Mask g : order_filters(cp.poset()))
    if ((g & ~f & ~cls) == 0) out |= g;
  return out;
}

Mask color_retract_by_scan(const ColoredPoset& cp, Mask f, int c) {
  Mask cls = c <= cp.max_color() ? cp.color_class(c) : 0;
  Mask out = ~Mask{0};
  for (Mask g : order_filters(cp.poset()))
    if ((f & ~g & ~cls) == 0) out &= g;
  return out;
}

bool toggle_leq(const ColoredPoset& cp, Mask a, Mask b) {
  if (a == b) return true;
  std::unordered_set<Mask> seen{a};
  std::queue<Mask> q;
  q.push(a);
  while (!q.empty()) {
    Mask f = q.front();
    q.pop();
    for (int c = 1; c <= cp.max_color(); ++c) {
      Mask s = color_toggle(cp, f, c);
      if (s == b) return true;
      // Only moves that strictly grow the filter count.
      if ((s & ~f) != 0 && (f & ~s) == 0 && seen.insert(s).second) q.push(s);
    }
  }
  return false;
}

std::vector<Mask> toggle_closure(const ColoredPoset& cp, Mask seed) {
  std::unordered_set<Mask> seen{seed};
  std::queue<Mask> q;
  q.push(seed);
  while (!q.empty()) {
    Mask f = q.front();
    q.pop();
    for (int c = 1; c <= cp.max_color(); ++c) {
      Mask s = color_toggle(cp, f, c);
      if (seen.insert(s).second) q.push(s);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::make_pair(mask_count(a), a) < std::make_pair(mask_count(b), b);
  });
  return out;
}

CheckReport verify_toggle_properties(const ColoredPoset& cp, bool single_step) {
  CheckReport rep;
  rep.case_name = "toggles";
  auto filters = order_filters(cp.poset());

  struct Prop {
    std::string name;
    bool pass = true;
    std::string wit;
  };
  Prop sandwich{"sandwich"}, invo{"toggle_involution"},
      ext{"extend_stable"}, ret{"retract_stable"}, step{"single_step"};
  auto fail = [](Prop& pr, Mask f, int c) {
    if (!pr.pass) return;
    pr.pass = false;
    pr.wit = "f=" + std::to_string(f) + " c=" + std::to_string(c);
  };

  for (Mask f : filters)
    for (int c = 1; c <= cp.max_color(); ++c) {
      Mask a = color_extend(cp, f, c);
      Mask r = color_retract(cp, f, c);
      Mask s = color_toggle(cp, f, c);
      if ((a & f) != f || (r & ~f) != 0 || (a & s) != s || (s & r) != r)
        fail(sandwich, f, c);
      if (color_toggle(cp, s, c) != f) fail(invo, f, c);
      if (color_extend(cp, s, c) != a) fail(ext, f, c);
      if (color_retract(cp, s, c) != r) fail(ret, f, c);
      if (single_step && mask_count(f ^ s) > 1) fail(step, f, c);
    }

  rep.add(sandwich.name, sandwich.pass, sandwich.wit);
  rep.add(invo.name, invo.pass, invo.wit);
  rep.add(ext.name, ext.pass, ext.wit);
  rep.add(ret.name, ret.pass, ret.wit);
  if (single_step) rep.add(step.name, step.pass, step.wit);
  return rep;
}

CheckReport verify_orders_coincide(const ColoredPoset& cp) {
  CheckReport rep;
  rep.case_name = "orders";
  auto filters = order_filters(cp.poset());
  int n = static_cast<int>(filters.size());
  std::unordered_map<Mask, int> index;
  for (int i = 0; i < n; ++i) index[filters[i]] = i;

  // Transitive closure of the strictly growing toggle moves.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> next(n);
  for (int i = 0; i < n; ++i) {
    reach[i][i] = 1;
    for (int c = 1; c <= cp.max_color(); ++c) {
      Mask s = color_toggle(cp, filters[i], c);
      if ((s & ~filters[i]) != 0 && (filters[i] & ~s) == 0)
        next[i].push_back(index.at(s));
    }
  }
  for (int i = 0; i < n; ++i) {
    std::queue<int> q;
    q.push(i);
    while (!q.empty()) {
      int j = q.front();
      q.pop();
      for (int k : next[j])
        if (!reach[i][k]) {
          reach[i][k] = 1;
          q.push(k);
        }
    }
  }

  bool pass = true;
  std::string wit;
  for (int i = 0; i < n && pass; ++i)
    for (int j = 0; j < n && pass; ++j) {
      bool sub = (filters[i] & ~filters[j]) == 0;
      if (sub != static_cast<bool>(reach[i][j])) {
        pass = false;
        wit = "a=" + std::to_string(filters[i]) +
              " b=" + std::to_string(filters[j]);
      }
    }
  rep.add("containment_equals_toggle_order", pass, wit);
  return rep;
}

bool colored_isomorphic(const ColoredPoset& a, const ColoredPoset& b) {
  const Poset& pa = a.poset();
  const Poset& pb = b.poset();
  if (pa.size() != pb.size() || a.max_color() != b.max_color()) return false;

  auto class_chain = [](const ColoredPoset& cp, int c) {
    std::vector<int> xs = mask_elements(cp.color_class(c));
    const Poset& p = cp.poset();
    std::sort(xs.begin(), xs.end(),
              [&p](int x, int y) { return p.leq(y, x); });
    for (std::size_t k = 1; k < xs.size(); ++k)
      if (!p.leq(xs[k], xs[k - 1]))
        throw std::invalid_argument("color class is not a chain");
    return xs;
  };

  std::vector<int> to_b(pa.size(), -1);
  for (int c = 1; c <= a.max_color(); ++c) {
    std::vector<int> ca = class_chain(a, c);
    std::vector<int> cb = class_chain(b, c);
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) to_b[ca[k]] = cb[k];
  }
  for (int x = 0; x < pa.size(); ++x)
    for (int y = 0; y < pa.size(); ++y)
      if (pa.leq(x, y) != pb.leq(to_b[x], to_b[y])) return false;
  return true;
}

} // namespace dcfold
