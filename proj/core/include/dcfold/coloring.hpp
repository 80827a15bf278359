#pragma once

#include "dcfold/poset.hpp"
#include "dcfold/report.hpp"

namespace dcfold {

// A poset together with a color in 1..max_color per element.
class ColoredPoset {
public:
  ColoredPoset() = default;
  ColoredPoset(Poset p, std::vector<int> colors);

  const Poset& poset() const { return p_; }
  int color(int x) const { return colors_[x]; }
  const std::vector<int>& colors() const { return colors_; }
  int max_color() const { return max_color_; }
  Mask color_class(int c) const { return classes_[c]; }

private:
  Poset p_;
  std::vector<int> colors_;
  int max_color_ = 0;
  std::vector<Mask> classes_; // indexed by color, entry 0 unused
};

// The unique coloring of a connected d-complete poset extending a given
// assignment of distinct colors to its top tree: working downwards, an
// element below the tree is the minimum of some d_k-interval and copies the
// color of that interval's maximum.  Throws if the poset does not support
// this (no interval found, or two intervals disagree).
ColoredPoset derive_coloring(const Poset& p,
                             const std::vector<std::pair<int, int>>& top_colors);

// Facts that hold for every coloring produced by derive_coloring:
// covers and incomparable pairs get distinct colors, chain intervals use
// each color at most once, color classes are chains, and the two ends of a
// d_k-interval agree.
CheckReport verify_coloring_properties(const ColoredPoset& cp);

// Filter moves for one color c.
//
//   color_extend   largest filter containing f whose new elements all have
//                  color c
//   color_retract  smallest filter inside f whose removed elements all have
//                  color c
//   color_toggle   (extend \ f) union retract when that is a filter, else f
Mask color_extend(const ColoredPoset& cp, Mask f, int c);
Mask color_retract(const ColoredPoset& cp, Mask f, int c);
Mask color_toggle(const ColoredPoset& cp, Mask f, int c);

// Definitional versions that enumerate all filters; oracle for tests.
Mask color_extend_by_scan(const ColoredPoset& cp, Mask f, int c);
Mask color_retract_by_scan(const ColoredPoset& cp, Mask f, int c);

// The toggle order: a <= b when b is reachable from a by toggles that
// strictly grow the filter.
bool toggle_leq(const ColoredPoset& cp, Mask a, Mask b);

// Every filter reachable from seed by toggles, sorted by (size, mask).
std::vector<Mask> toggle_closure(const ColoredPoset& cp, Mask seed);

// Toggle algebra that holds for every colored poset: each color_toggle is
// an involution fixing its extend and retract, sandwiched between them.
// With single_step set, additionally require |f ^ toggle(f)| <= 1, which is
// the extra guarantee for colorings of d-complete posets.
CheckReport verify_toggle_properties(const ColoredPoset& cp, bool single_step);

// Containment of filters coincides with the toggle order; holds for
// colorings of d-complete posets.
CheckReport verify_orders_coincide(const ColoredPoset& cp);

// Order isomorphism that keeps every color fixed.  Requires color classes
// to be chains (throws otherwise): any color-preserving isomorphism must
// then send the k-th element of a class to the k-th element of the same
// class, so only that one candidate map needs testing.
bool colored_isomorphic(const ColoredPoset& a, const ColoredPoset& b);

} // namespace dcfold
