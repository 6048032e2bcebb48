#pragma once

// Diagram families: pretzel links P(a_1, ..., a_k) and torus links T(pn, n)
// drawn as closed braids.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "zcolor/diagram.hpp"
#include "zcolor/error.hpp"
#include "zcolor/intlinalg.hpp"

namespace zcolor {

struct PretzelSpec {
  std::vector<long> twists;  // signed half-twist counts, all nonzero
};

struct TorusSpec {
  long p = 1;         // nonzero; sign picks the mirror
  std::size_t n = 2;  // strand count, >= 2
};

// A generated pretzel diagram plus, for every twist region, its arcs listed
// top to bottom: e_0, e_1, ..., e_{m+1} for a region of m crossings, where
// crossing j of the region has over-arc e_j and under-arcs e_{j-1}, e_{j+1}.
// Consecutive entries can name the same arc when a region closes on itself.
struct PretzelLayout {
  Diagram diagram;
  std::vector<std::vector<ArcIndex>> twist_arcs;
};

// A generated torus diagram plus the arc occupying each strand position at
// the left boundary of each braid column: columns[j][i] is the arc in
// position i (0-based) entering column j. Column 0 borders the closure seam
// and its arcs are 0..n-1.
struct TorusLayout {
  Diagram diagram;
  std::vector<std::vector<ArcIndex>> columns;
};

inline std::string pretzel_name(const PretzelSpec& spec) {
  std::string s = "P(";
  for (std::size_t i = 0; i < spec.twists.size(); ++i) s += (i ? "," : "") + std::to_string(spec.twists[i]);
  return s + ")";
}

inline std::string torus_name(const TorusSpec& spec) {
  return "T(" + std::to_string(spec.p * static_cast<long>(spec.n)) + "," + std::to_string(spec.n) + ")";
}

namespace detail {

// Renumbers union-find classes of `slots` labels in order of first
// appearance.
class SlotNumbering {
 public:
  SlotNumbering(DisjointSets& sets, std::size_t slot_count)
      : sets_(sets), index_(slot_count, kUnassigned) {}

  ArcIndex arc(std::size_t slot) {
    auto root = sets_.find(slot);
    if (index_[root] == kUnassigned) index_[root] = next_++;
    return index_[root];
  }
  std::size_t count() const { return next_; }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  DisjointSets& sets_;
  std::vector<std::size_t> index_;
  std::size_t next_ = 0;
};

}  // namespace detail

inline PretzelLayout pretzel_layout(const PretzelSpec& spec) {
  const std::size_t k = spec.twists.size();
  if (k == 0) throw UnsupportedInput("pretzel link needs at least one twist region");
  for (long a : spec.twists)
    if (a == 0) throw UnsupportedInput("pretzel twist 0 is unsupported (a 0-tangle changes the arc structure)");

  // Region i owns segment labels offset[i] + e for e = 0..m_i+1.
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(std::labs(spec.twists[i])) + 2;

  struct Ends {
    std::size_t nw, ne, sw, se;
  };
  std::vector<Ends> ends(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t m = static_cast<std::size_t>(std::labs(spec.twists[i]));
    const std::size_t base = offset[i];
    // Positive regions: the over-strand runs upper-left to lower-right at
    // every crossing. Negative regions are the mirror image.
    if (spec.twists[i] > 0)
      ends[i] = {base + 1, base + 0, base + m + 1, base + m};
    else
      ends[i] = {base + 0, base + 1, base + m, base + m + 1};
  }

  detail::DisjointSets sets(offset[k]);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    sets.unite(ends[i].ne, ends[next].nw);
    sets.unite(ends[i].se, ends[next].sw);
  }

  detail::SlotNumbering numbering(sets, offset[k]);
  PretzelLayout layout;
  layout.twist_arcs.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t s = offset[i]; s < offset[i + 1]; ++s) layout.twist_arcs[i].push_back(numbering.arc(s));

  Diagram& d = layout.diagram;
  d.name = pretzel_name(spec);
  d.claimed_minimal = true;
  d.arc_count = numbering.count();
  for (const auto& arcs : layout.twist_arcs)
    for (std::size_t j = 1; j + 1 < arcs.size(); ++j) d.crossings.emplace_back(arcs[j], arcs[j - 1], arcs[j + 1]);

  // A component lying entirely over the rest (P(1,-1) is the smallest case)
  // has no under-crossing, so it cannot be written down as arcs.
  std::vector<int> under_uses(d.arc_count, 0);
  for (const auto& x : d.crossings)
    for (ArcIndex a : x.under) ++under_uses[a];
  if (std::find(under_uses.begin(), under_uses.end(), 0) != under_uses.end())
    throw UnsupportedInput(d.name + " has a component that never passes under a crossing");
  return layout;
}

inline Diagram gen_pretzel(const PretzelSpec& spec) { return pretzel_layout(spec).diagram; }

inline TorusLayout torus_layout(const TorusSpec& spec) {
  if (spec.p == 0) throw UnsupportedInput("torus link needs p != 0");
  if (spec.n < 2) throw UnsupportedInput("torus link needs at least 2 strands");
  const std::size_t n = spec.n;
  const std::size_t columns = static_cast<std::size_t>(std::labs(spec.p)) * n;
  const bool positive = spec.p > 0;
  auto slot = [&](std::size_t column, std::size_t position) { return (column % columns) * n + position; };

  // Positive column: the strand in the last position passes over all the
  // others into the first position; every other strand shifts one position
  // down, passing under once. The mirror runs first-to-last.
  detail::DisjointSets sets(columns * n);
  for (std::size_t j = 0; j < columns; ++j) {
    if (positive)
      sets.unite(slot(j + 1, 0), slot(j, n - 1));
    else
      sets.unite(slot(j + 1, n - 1), slot(j, 0));
  }

  detail::SlotNumbering numbering(sets, columns * n);
  TorusLayout layout;
  layout.columns.assign(columns, std::vector<ArcIndex>(n));
  for (std::size_t j = 0; j < columns; ++j)
    for (std::size_t i = 0; i < n; ++i) layout.columns[j][i] = numbering.arc(slot(j, i));

  Diagram& d = layout.diagram;
  d.name = torus_name(spec);
  d.claimed_minimal = true;
  d.arc_count = numbering.count();
  for (std::size_t j = 0; j < columns; ++j) {
    const auto& in = layout.columns[j];
    const auto& out = layout.columns[(j + 1) % columns];
    if (positive) {
      for (std::size_t i = n - 1; i >= 1; --i) d.crossings.emplace_back(in[n - 1], in[i - 1], out[i]);
    } else {
      for (std::size_t i = 1; i < n; ++i) d.crossings.emplace_back(in[0], in[i], out[i - 1]);
    }
  }
  return layout;
}

inline Diagram gen_torus(const TorusSpec& spec) { return torus_layout(spec).diagram; }

// Column recoloring matrix for the positive braid column:
// Y_1 = X_n and Y_i = 2 X_n - X_{i-1} for i >= 2.
inline IntMatrix build_torus_matrix(std::size_t n) {
  if (n < 2) throw UnsupportedInput("torus matrix needs n >= 2");
  IntMatrix a(n, n);
  a(0, n - 1) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    a(i, i - 1) = -1;
    a(i, n - 1) += 2;
  }
  return a;
}

}  // namespace zcolor
