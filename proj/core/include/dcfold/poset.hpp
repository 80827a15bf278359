#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dcfold {

// Ground sets are capped at 64 elements so subsets fit in one word.
using Mask = std::uint64_t;

constexpr int max_poset_size = 64;

constexpr Mask mask_bit(int x) { return Mask{1} << x; }
constexpr bool mask_contains(Mask m, int x) { return (m >> x) & Mask{1}; }
int mask_count(Mask m);
std::vector<int> mask_elements(Mask m);

// A finite poset presented by its Hasse diagram.  A cover (x, y) means y
// covers x ("x -> y"); the constructor rejects out-of-range ids, cycles,
// duplicates and edges implied by transitivity, so the stored cover list is
// always the transitive reduction of the order.
class Poset {
public:
  Poset() = default;
  Poset(int n, std::vector<std::pair<int, int>> covers,
        std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::string& label(int x) const { return labels_[x]; }

  bool leq(int x, int y) const { return mask_contains(up_[x], y); }
  Mask up_set(int x) const { return up_[x]; }     // { y : y >= x }
  Mask down_set(int x) const { return down_[x]; } // { y : y <= x }
  Mask interval(int x, int y) const { return up_[x] & down_[y]; }
  const std::vector<int>& upper_covers(int x) const { return uc_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lc_[x]; }
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  bool is_filter(Mask f) const;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::string> labels_;
  std::vector<Mask> up_, down_;
  std::vector<std::vector<int>> uc_, lc_;
};

// ---- concrete families ------------------------------------------------

// Rectangle Y_{m,n}: cells (i,j), 1 <= i <= m, 1 <= j <= n, ordered by
// (i1,j1) <= (i2,j2) iff i1 >= i2 and j1 >= j2; ids are row-major, so the
// maximum (1,1) is element 0.
Poset young_rect(int m, int n);

// Shifted triangle SY_n: cells (i,j) with 1 <= i <= j <= n, same order as
// young_rect; ids in reading order.
Poset shifted_young(int n);

// Double-tailed diamond d_k(1) for k >= 3: a (k-2)-chain, two incomparable
// elements, and a (k-2)-chain on top.  With minus set, the top tail loses
// its last element (d_k^-(1), k >= 4).  Ids from bottom to top.
Poset double_tailed(int k, bool minus = false);

// ---- order filters -----------------------------------------------------

// All up-closed subsets, produced by breadth-first search over the filter
// lattice: a filter grows by adjoining one maximal element of its
// complement at a time.  Sorted by (size, mask).
std::vector<Mask> order_filters(const Poset& p);

// The same set by scanning all 2^n subsets; cross-check for |P| <= 20.
std::vector<Mask> order_filters_by_scan(const Poset& p);

// ---- interval classification -------------------------------------------

// Shapes of intervals [x, y] that the completeness axioms care about:
//   diamond       [x,y] isomorphic to d_k(1), k >= 3
//   diamond_minus [x,y] isomorphic to d_k^-(1), k >= 4
// plus the 3-element configuration {w,x,y} with w -> x, w -> y, which is
// not an interval and is only ever produced by the axiom checker.
enum class IntervalShape { diamond, diamond_minus, triple, other };

struct IntervalClass {
  IntervalShape shape = IntervalShape::other;
  int k = 0; // meaningful for diamond / diamond_minus
};

IntervalClass classify_interval(const Poset& p, int x, int y);

// All z such that [w, z] is a d_k-interval, with the witnessing k.
std::vector<std::pair<int, int>> completing_tops(const Poset& p, int w);

// ---- completeness axioms -----------------------------------------------

// Axiom 1: every incomplete configuration (a {w,x,y} triple or a
// d_k^--interval) extends to a d_k-interval by one further element.
// Axiom 2: the maximum of a d_k-interval covers nothing outside it.
// Axiom 3: distinct incomplete configurations never share their top part.
struct DCompleteViolation {
  int axiom;                 // 1, 2 or 3
  std::vector<int> elements; // witness configuration
};

struct DCompleteReport {
  bool ok = true;
  std::vector<DCompleteViolation> violations;
};

DCompleteReport d_complete_report(const Poset& p);
bool is_d_complete(const Poset& p);

// Elements x such that every y >= x has at most one upper cover; for a
// connected d-complete poset this is the top tree.  Rejects disconnected
// input.
Mask top_tree(const Poset& p);

// ---- structural checks and isomorphism ----------------------------------

struct StructureReport {
  bool connected = false;
  bool unique_max = false;
  bool self_dual = false;
};

bool is_connected(const Poset& p);
Poset dual(const Poset& p);
StructureReport structure_report(const Poset& p);

bool poset_isomorphic(const Poset& a, const Poset& b);

// Exact directed-graph isomorphism; used to compare Hasse diagrams that
// were produced by unrelated constructions.
bool digraph_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                        int n2, const std::vector<std::pair<int, int>>& e2);

} // namespace dcfold
