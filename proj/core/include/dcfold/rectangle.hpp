#pragma once

#include "dcfold/coloring.hpp"
#include "dcfold/report.hpp"

#include <vector>

namespace dcfold {

// Filters of the rectangle Y_{rows,cols} read off by row lengths.  The
// ambient path has n = rows + cols - 1 nodes; a filter with row lengths
// k_1 >= ... >= k_m turns into the m-subset {k_i + m + 1 - i} of [1, n+1],
// and that map is a bijection.

std::vector<int> row_profile(int rows, int cols, Mask f);

std::vector<int> index_set(int rows, int cols, Mask f); // ascending

Mask filter_with_index_set(int rows, int cols, const std::vector<int>& idx);

// No two members of the index set may add up to n + 2; requires
// rows <= cols so that the mirror i -> n + 2 - i moves the base point.
bool mirror_free(int rows, int cols, Mask f);

// All mirror-free filters, sorted by (size, mask).
std::vector<Mask> mirror_free_filters(int rows, int cols);

// The rectangle with its diagonal coloring j - i + rows, and with the
// coloring folded over the mirror k -> n + 1 - k.
ColoredPoset rectangle_colored(int rows, int cols);
ColoredPoset rectangle_folded(int rows, int cols);

// Toggling color k grows a filter exactly when its index set contains k
// but not k + 1, shrinks it in the mirrored situation, and otherwise
// fixes it; a growing toggle swaps k for k + 1 in the index set.
CheckReport verify_index_step_rules(int rows, int cols);

// The mirror-free filters are exactly the filters reachable from the
// empty one by folded toggles, and they are counted by the folded orbit.
CheckReport verify_mirror_free_equality(int rows, int cols);

// One row per rectangle Y_{m,n+1-m} with 1 <= m <= (n+1)/2, n <= max_n,
// ordered by (n, m).  The n = 1 diagram has nothing to fold, so that row
// counts the plain orbit and equal only compares the counts; every other
// row also checks the two filter families element by element.
struct RectangleRow {
  int m = 0;
  int n = 0;
  long long filters = 0;
  long long mirror_free = 0;
  long long folded_orbit = 0;
  bool equal = false;
};

std::vector<RectangleRow> rectangle_table(int max_n);

} // namespace dcfold
