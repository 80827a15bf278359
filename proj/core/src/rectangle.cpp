#include "dcfold/rectangle.hpp"

#include "dcfold/folding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dcfold {

namespace {

void check_shape(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("rectangle sides must be positive");
  if (rows > cols)
    throw std::invalid_argument("rectangle must satisfy rows <= cols");
  if (rows * cols > max_poset_size)
    throw std::invalid_argument("rectangle exceeds the ground-set cap");
}

std::string shape_name(int rows, int cols) {
  return "Y(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Mask low_bits(int c) { return c >= 64 ? ~Mask{0} : (Mask{1} << c) - 1; }

} // namespace

std::vector<int> row_profile(int rows, int cols, Mask f) {
  check_shape(rows, cols);
  if ((f & ~low_bits(rows * cols)) != 0)
    throw std::invalid_argument("mask reaches outside the rectangle");
  std::vector<int> k(rows);
  for (int i = 0; i < rows; ++i) {
    Mask row = (f >> (i * cols)) & low_bits(cols);
    int len = mask_count(row);
    if (row != low_bits(len))
      throw std::invalid_argument("row is not a prefix, so not a filter");
    if (i > 0 && len > k[i - 1])
      throw std::invalid_argument("row lengths increase, so not a filter");
    k[i] = len;
  }
  return k;
}

std::vector<int> index_set(int rows, int cols, Mask f) {
  std::vector<int> k = row_profile(rows, cols, f);
  std::vector<int> idx(rows);
  // k is non-increasing, so k_i + rows + 1 - i strictly drops with i and
  // reversing the rows lists the indices in ascending order.
  for (int i = 1; i <= rows; ++i) idx[rows - i] = k[i - 1] + rows + 1 - i;
  return idx;
}

Mask filter_with_index_set(int rows, int cols, const std::vector<int>& idx) {
  check_shape(rows, cols);
  int n = rows + cols - 1;
  if (static_cast<int>(idx.size()) != rows)
    throw std::invalid_argument("need one index per row");
  for (int i = 0; i < rows; ++i) {
    if (idx[i] < 1 || idx[i] > n + 1)
      throw std::invalid_argument("index outside [1, n + 1]");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument("indices must strictly increase");
  }
  // Strictly increasing indices in [1, n + 1] land every row length in
  // [0, cols] with the lengths non-increasing, so this is always a filter.
  Mask f = 0;
  for (int i = 1; i <= rows; ++i) {
    int len = idx[rows - i] - (rows + 1 - i);
    f |= low_bits(len) << ((i - 1) * cols);
  }
  return f;
}

bool mirror_free(int rows, int cols, Mask f) {
  std::vector<int> idx = index_set(rows, cols, f);
  int n = rows + cols - 1;
  for (int a : idx)
    if (std::binary_search(idx.begin(), idx.end(), n + 2 - a)) return false;
  return true;
}

std::vector<Mask> mirror_free_filters(int rows, int cols) {
  std::vector<Mask> out;
  for (Mask f : order_filters(young_rect(rows, cols)))
    if (mirror_free(rows, cols, f)) out.push_back(f);
  return out;
}

ColoredPoset rectangle_colored(int rows, int cols) {
  check_shape(rows, cols);
  std::vector<int> colors(rows * cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      colors[(i - 1) * cols + (j - 1)] = j - i + rows;
  return ColoredPoset(young_rect(rows, cols), colors);
}

ColoredPoset rectangle_folded(int rows, int cols) {
  check_shape(rows, cols);
  std::vector<int> colors(rows * cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      colors[(i - 1) * cols + (j - 1)] = std::min(j - i + rows, i - j + cols);
  return ColoredPoset(young_rect(rows, cols), colors);
}

CheckReport verify_index_step_rules(int rows, int cols) {
  CheckReport rep;
  rep.case_name = shape_name(rows, cols);
  ColoredPoset cp = rectangle_colored(rows, cols);
  int n = rows + cols - 1;
  std::vector<Mask> filters = order_filters(cp.poset());

  bool bijective = true;
  std::string bw;
  std::set<std::vector<int>> seen;
  for (Mask f : filters) {
    std::vector<int> idx = index_set(rows, cols, f);
    if (filter_with_index_set(rows, cols, idx) != f || !seen.insert(idx).second) {
      bijective = false;
      bw = "filter " + std::to_string(f);
      break;
    }
  }
  rep.add("index_maps_filters_onto_subsets",
          bijective && static_cast<long long>(seen.size()) == binomial(n + 1, rows),
          bw);

  bool grow_ok = true, shrink_ok = true, fixed_ok = true, swap_ok = true;
  std::string gw, sw, fw, ww;
  auto spot = [](Mask f, int k) {
    return "filter " + std::to_string(f) + " color " + std::to_string(k);
  };
  for (Mask f : filters) {
    std::vector<int> idx = index_set(rows, cols, f);
    auto has = [&](int k) {
      return std::binary_search(idx.begin(), idx.end(), k);
    };
    for (int k = 1; k <= n; ++k) {
      Mask t = color_toggle(cp, f, k);
      bool grew = t != f && (t & f) == f;
      bool shrank = t != f && (t & f) == t;
      if (grow_ok && grew != (has(k) && !has(k + 1))) {
        grow_ok = false;
        gw = spot(f, k);
      }
      if (shrink_ok && shrank != (!has(k) && has(k + 1))) {
        shrink_ok = false;
        sw = spot(f, k);
      }
      if (fixed_ok && (t == f) != (has(k) == has(k + 1))) {
        fixed_ok = false;
        fw = spot(f, k);
      }
      if (swap_ok && grew) {
        std::vector<int> want = idx;
        *std::find(want.begin(), want.end(), k) = k + 1;
        std::sort(want.begin(), want.end());
        if (index_set(rows, cols, t) != want) {
          swap_ok = false;
          ww = spot(f, k);
        }
      }
    }
  }
  rep.add("grow_iff_k_in_and_next_out", grow_ok, gw);
  rep.add("shrink_iff_k_out_and_next_in", shrink_ok, sw);
  rep.add("fixed_iff_k_and_next_agree", fixed_ok, fw);
  rep.add("growing_toggle_swaps_k_for_next", swap_ok, ww);
  return rep;
}

CheckReport verify_mirror_free_equality(int rows, int cols) {
  check_shape(rows, cols);
  int n = rows + cols - 1;
  if (n < 2)
    throw std::invalid_argument("path with one node has nothing to fold");
  CheckReport rep;
  rep.case_name = shape_name(rows, cols);

  RootSystem rs(LieType::A, n);
  Folding fd = make_folding(rs, diagram_flip(rs));
  ColoredPoset folded = rectangle_folded(rows, cols);
  rep.add("folded_colors_match_construction",
          fold_colors(fd, rectangle_colored(rows, cols)) == folded.colors());

  std::vector<Mask> ss = mirror_free_filters(rows, cols);
  std::vector<Mask> closure = toggle_closure(folded, 0);
  std::string w;
  if (ss != closure) {
    for (Mask f : ss)
      if (!std::binary_search(closure.begin(), closure.end(), f,
                              [](Mask a, Mask b) {
                                return std::make_pair(mask_count(a), a) <
                                       std::make_pair(mask_count(b), b);
                              }))
        w = "mirror-free filter " + std::to_string(f) + " not reached";
    if (w.empty()) w = "toggle closure reaches a mirrored filter";
  }
  rep.add("mirror_free_equals_toggle_closure", ss == closure, w);

  FoldedOrbit fo = build_folded_orbit(fd, rs.fundamental_weight(rows));
  rep.add("mirror_free_count_is_orbit_size",
          ss.size() == fo.orbit.nodes.size(),
          std::to_string(ss.size()) + " filters vs " +
              std::to_string(fo.orbit.nodes.size()) + " weights");
  return rep;
}

std::vector<RectangleRow> rectangle_table(int max_n) {
  std::vector<RectangleRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; 2 * m <= n + 1; ++m) {
      int cols = n + 1 - m;
      RectangleRow row;
      row.m = m;
      row.n = n;
      row.filters =
          static_cast<long long>(order_filters(young_rect(m, cols)).size());
      std::vector<Mask> ss = mirror_free_filters(m, cols);
      row.mirror_free = static_cast<long long>(ss.size());
      RootSystem rs(LieType::A, n);
      if (n == 1) {
        row.folded_orbit = static_cast<long long>(
            weyl_orbit(rs, rs.fundamental_weight(1)).nodes.size());
        row.equal = row.mirror_free == row.folded_orbit;
      } else {
        Folding fd = make_folding(rs, diagram_flip(rs));
        FoldedOrbit fo = build_folded_orbit(fd, rs.fundamental_weight(m));
        row.folded_orbit = static_cast<long long>(fo.orbit.nodes.size());
        row.equal = row.mirror_free == row.folded_orbit &&
                    ss == toggle_closure(rectangle_folded(m, cols), 0);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

} // namespace dcfold
