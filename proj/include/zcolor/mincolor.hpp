#pragma once

// Fewest distinct colors over the nontrivial colorings of a fixed diagram.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zcolor/coloring.hpp"
#include "zcolor/diagram.hpp"
#include "zcolor/error.hpp"
#include "zcolor/intlinalg.hpp"

namespace zcolor {

struct MinColorResult {
  ColorCount minimum = 0;
  ZColoring witness;  // normalized: min 0, gcd 1
  bool exact = false;
  std::size_t bound_used = 0;
};

namespace detail {

// Best (count, normalized witness) pair seen so far; ties go to the
// lexicographically smallest witness so the answer does not depend on
// enumeration order.
class MinColorTracker {
 public:
  void offer(const IntVector& coloring) {
    const ZColoring w{coloring};
    const ColorCount count = count_colors(w);
    if (best_ && count > best_->minimum) return;
    ZColoring up = normalize(w);
    ZColoring down = normalize(ZColoring{negated(coloring)});
    ZColoring& candidate = down.colors < up.colors ? down : up;
    if (!best_ || count < best_->minimum || candidate.colors < best_->witness.colors) {
      best_ = MinColorResult{count, std::move(candidate), false, 0};
    }
  }
  const std::optional<MinColorResult>& best() const { return best_; }

 private:
  static IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
  }
  std::optional<MinColorResult> best_;
};

// Odometer over [-bound, bound]^k.
inline bool next_coefficients(std::vector<long>& c, long bound) {
  for (auto& x : c) {
    if (x < bound) {
      ++x;
      return true;
    }
    x = -bound;
  }
  return false;
}

}  // namespace detail

// Colorings are t * (1, ..., 1) + sum_i c_i * pinned_i, and the color count
// ignores t and any nonzero rescaling of (c_1, ..., c_k). With a single
// pinned direction one evaluation is exact; otherwise primitive coefficient
// vectors in [-bound, bound]^k with positive leading entry are searched.
inline MinColorResult min_colors(const Diagram& d, unsigned bound = 6) {
  if (bound == 0) throw UnsupportedInput("search bound must be positive");
  const ColoringSpace space = coloring_space(d);
  const std::size_t k = space.pinned.size();
  if (k == 0) throw NoNontrivialColoring("diagram '" + d.name + "' admits only trivial colorings");

  detail::MinColorTracker tracker;
  if (k == 1) {
    tracker.offer(space.pinned.front());
    MinColorResult r = *tracker.best();
    r.exact = true;
    r.bound_used = 1;
    return r;
  }

  const long b = static_cast<long>(bound);
  std::vector<long> coeffs(k, -b);
  IntVector as_int(k);
  do {
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](long x) { return x != 0; });
    if (lead == coeffs.end() || *lead < 0) continue;
    long g = 0;
    for (long x : coeffs) g = std::gcd(g, x);
    if (g != 1) continue;
    for (std::size_t i = 0; i < k; ++i) as_int[i] = coeffs[i];
    tracker.offer(combine(space.pinned, as_int, space.arc_count));
  } while (detail::next_coefficients(coeffs, b));

  MinColorResult r = *tracker.best();
  r.exact = false;
  r.bound_used = bound;
  return r;
}

// Normalized color set of the nontrivial coloring of a diagram whose
// coloring lattice has rank 2. That coloring is unique up to affine maps,
// which leaves two normalized orientations (c and max - c); the one whose
// sorted color list is lexicographically larger is returned.
inline std::set<Int> color_set(const Diagram& d) {
  const ColoringSpace space = coloring_space(d);
  if (space.dim() != 2)
    throw UnsupportedInput("color_set needs a coloring lattice of rank 2, '" + d.name + "' has rank " +
                           std::to_string(space.dim()));
  ZColoring up = normalize(ZColoring{space.pinned.front()});
  ZColoring down = up;
  const Int top = *std::max_element(up.colors.begin(), up.colors.end());
  for (auto& x : down.colors) x = top - x;
  std::set<Int> a = color_values(up), b = color_values(down);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? b : a;
}

inline constexpr std::size_t kBruteForceArcLimit = 14;

namespace detail {

// Depth-first enumeration of colorings with every color in [0, box],
// propagating forced values through the crossing relations.
class BoxedColoringSearch {
 public:
  BoxedColoringSearch(const Diagram& d, long box) : d_(d), box_(box), touching_(d.arc_count) {
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const Crossing& x = d.crossings[c];
      for (ArcIndex a : {x.over, x.under[0], x.under[1]})
        if (touching_[a].empty() || touching_[a].back() != c) touching_[a].push_back(c);
    }
  }

  std::optional<ColorCount> run() {
    std::vector<std::optional<long>> colors(d_.arc_count);
    search(colors);
    return best_;
  }

 private:
  using State = std::vector<std::optional<long>>;

  // Fixes arc = value and everything it forces; false on contradiction.
  bool assign(State& s, ArcIndex arc, long value) const {
    std::vector<std::pair<ArcIndex, long>> pending{{arc, value}};
    while (!pending.empty()) {
      auto [a, v] = pending.back();
      pending.pop_back();
      if (s[a]) {
        if (*s[a] != v) return false;
        continue;
      }
      if (v < 0 || v > box_) return false;
      s[a] = v;
      for (std::size_t c : touching_[a]) {
        const Crossing& x = d_.crossings[c];
        // coefficient * unknown + known_sum = 0 with at most one unknown arc
        std::optional<ArcIndex> unknown;
        long coefficient = 0, known_sum = 0;
        bool several_unknown = false;
        const std::pair<ArcIndex, long> terms[3] = {{x.over, 2}, {x.under[0], -1}, {x.under[1], -1}};
        for (auto [arc_i, w] : terms) {
          if (s[arc_i]) {
            known_sum += w * *s[arc_i];
          } else if (!unknown || *unknown == arc_i) {
            unknown = arc_i;
            coefficient += w;
          } else {
            several_unknown = true;
          }
        }
        if (several_unknown) continue;
        if (!unknown || coefficient == 0) {
          if (known_sum != 0) return false;
          continue;
        }
        if (known_sum % coefficient != 0) return false;
        pending.emplace_back(*unknown, -known_sum / coefficient);
      }
    }
    return true;
  }

  static std::size_t distinct(const State& s) {
    std::set<long> seen;
    for (const auto& x : s)
      if (x) seen.insert(*x);
    return seen.size();
  }

  void search(const State& s) {
    if (best_ && distinct(s) >= *best_) return;
    auto open = std::find_if(s.begin(), s.end(), [](const auto& x) { return !x.has_value(); });
    if (open == s.end()) {
      const std::size_t count = distinct(s);
      if (count >= 2) best_ = count;
      return;
    }
    const auto arc = static_cast<ArcIndex>(open - s.begin());
    for (long v = 0; v <= box_; ++v) {
      State next = s;
      if (assign(next, arc, v)) search(next);
    }
  }

  const Diagram& d_;
  long box_;
  std::vector<std::vector<std::size_t>> touching_;
  std::optional<ColorCount> best_;
};

}  // namespace detail

// Independent check of min_colors by direct enumeration of colorings with
// entries in [0, box]. nullopt when no nonconstant coloring fits the box.
inline std::optional<ColorCount> brute_force_min(const Diagram& d, unsigned box) {
  if (d.arc_count > kBruteForceArcLimit)
    throw UnsupportedInput("brute force limited to " + std::to_string(kBruteForceArcLimit) + " arcs, '" + d.name +
                           "' has " + std::to_string(d.arc_count));
  if (box == 0) throw UnsupportedInput("brute force box must be positive");
  return detail::BoxedColoringSearch(d, static_cast<long>(box)).run();
}

}  // namespace zcolor
