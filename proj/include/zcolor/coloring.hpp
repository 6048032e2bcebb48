#pragma once

// Integer colorings of diagrams: an arc labelling with
// 2 * color(over) = color(under_a) + color(under_b) at every crossing.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zcolor/diagram.hpp"
#include "zcolor/error.hpp"
#include "zcolor/generators.hpp"
#include "zcolor/intlinalg.hpp"

namespace zcolor {

struct ZColoring {
  IntVector colors;  // indexed by arc

  friend bool operator==(const ZColoring&, const ZColoring&) = default;
};

using ColorCount = std::size_t;

// One row per crossing, one column per arc. A crossing (a; b, c) adds +2 at
// a and -1 at b and c; coinciding indices accumulate, so every row sums to 0.
inline IntMatrix coloring_matrix(const Diagram& d) {
  IntMatrix m(d.crossings.size(), d.arc_count);
  for (std::size_t r = 0; r < d.crossings.size(); ++r) {
    const Crossing& x = d.crossings[r];
    m(r, x.over) += 2;
    m(r, x.under[0]) -= 1;
    m(r, x.under[1]) -= 1;
  }
  return m;
}

// All integer colorings of one diagram.
//
// `kernel` is the Hermite basis of the solution lattice. Because arc 0 can
// always be shifted to color 0, the lattice splits as
//   Z * (1, ..., 1)  (+)  {colorings with color(arc 0) = 0},
// and `pinned` is a basis of the second summand: every coloring is
// t * (1, ..., 1) + sum_i c_i * pinned[i] for unique integers t, c_i.
struct ColoringSpace {
  std::string diagram_name;
  std::size_t arc_count = 0;
  KernelBasis kernel;
  IntVector trivial_coordinates;  // coordinates of (1, ..., 1) in `kernel`
  std::vector<IntVector> pinned;

  std::size_t dim() const { return kernel.dim; }
};

inline ColoringSpace coloring_space(const Diagram& d) {
  const IntMatrix m = coloring_matrix(d);
  ColoringSpace space;
  space.diagram_name = d.name;
  space.arc_count = d.arc_count;
  space.kernel = integer_kernel(m);
  if (d.arc_count == 0) return space;

  const IntVector ones(d.arc_count, Int(1));
  auto coords = lattice_coordinates(space.kernel, ones);
  if (!coords) throw Error("constant coloring missing from the kernel of '" + d.name + "'");
  space.trivial_coordinates = std::move(*coords);

  IntVector first_arc(d.arc_count, Int(0));
  first_arc[0] = 1;
  space.pinned = integer_kernel(m.with_row(first_arc)).vectors;
  return space;
}

// Diagram-level predicate: a nonconstant integer coloring exists.
inline bool is_z_colorable(const Diagram& d) { return coloring_space(d).dim() >= 2; }

struct CrossingCheck {
  std::vector<std::size_t> failed_crossings;
  bool ok() const { return failed_crossings.empty(); }
};

inline CrossingCheck verify_coloring(const Diagram& d, const ZColoring& c) {
  if (c.colors.size() != d.arc_count)
    throw ShapeError("coloring has " + std::to_string(c.colors.size()) + " colors but diagram '" + d.name +
                     "' has " + std::to_string(d.arc_count) + " arcs");
  CrossingCheck check;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& x = d.crossings[i];
    if (2 * c.colors[x.over] != c.colors[x.under[0]] + c.colors[x.under[1]]) check.failed_crossings.push_back(i);
  }
  return check;
}

// Shift so the minimum is 0, then divide by the gcd. Constant colorings map
// to all zeros.
inline ZColoring normalize(const ZColoring& c) {
  if (c.colors.empty()) return c;
  const Int lowest = *std::min_element(c.colors.begin(), c.colors.end());
  ZColoring out = c;
  for (auto& x : out.colors) x -= lowest;
  const Int g = content(out.colors);
  if (g > 1)
    for (auto& x : out.colors) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

inline ColorCount count_colors(const ZColoring& c) {
  std::set<Int> seen(c.colors.begin(), c.colors.end());
  return seen.size();
}

inline std::set<Int> color_values(const ZColoring& c) { return {c.colors.begin(), c.colors.end()}; }

// |det| of the coloring matrix with its last row and column removed.
// Defined for connected diagrams with as many arcs as crossings.
inline Int link_determinant(const Diagram& d) {
  if (!is_connected(d))
    throw UnsupportedInput("determinant needs a connected diagram without free circles ('" + d.name + "')");
  if (d.arc_count != d.crossings.size())
    throw UnsupportedInput("determinant needs arc_count == crossing count ('" + d.name + "')");
  const IntMatrix m = coloring_matrix(d);
  return abs_value(determinant(m.minor(m.rows() - 1, m.cols() - 1)));
}

// Number of colorings modulo q, constant ones included:
// q^(arcs - rank) * prod_i gcd(d_i, q) over the invariant factors d_i.
inline Int fox_coloring_count(const Diagram& d, unsigned long q) {
  if (q < 2) throw UnsupportedInput("Fox coloring modulus must be at least 2");
  const SmithDecomposition snf = smith_normal_form(coloring_matrix(d));
  Int count = 1;
  const Int modulus = q;
  for (std::size_t i = snf.rank; i < d.arc_count; ++i) count *= modulus;
  for (const auto& f : snf.invariant_factors()) count *= gcd_of(f, modulus);
  return count;
}

// A nonconstant coloring modulo q exists.
inline bool fox_colorable(const Diagram& d, unsigned long q) { return fox_coloring_count(d, q) > Int(q); }

// ---------------------------------------------------------------------------
// Torus links

// The recoloring matrix for n strands together with the column states
// X_1, A X_1, A^2 X_1, ...
struct TorusPropagator {
  IntMatrix matrix;
  std::vector<IntVector> states;
};

// Seed (1, 0, ..., 0, 1) pushed through `steps` columns; states has
// steps + 1 entries.
inline TorusPropagator propagate_torus(std::size_t n, std::size_t steps) {
  TorusPropagator prop{build_torus_matrix(n), {}};
  IntVector x(n, Int(0));
  x.front() = 1;
  x.back() = 1;
  prop.states.push_back(x);
  for (std::size_t s = 0; s < steps; ++s) prop.states.push_back(mat_vec(prop.matrix, prop.states.back()));
  return prop;
}

// Four-color coloring of gen_torus(spec), assigned column by column from
// the propagation states. Requires even n > 2.
inline ZColoring torus_coloring(const TorusSpec& spec) {
  if (spec.n <= 2 || spec.n % 2 != 0)
    throw HypothesisError("torus coloring needs an even strand count n > 2 (got n = " + std::to_string(spec.n) + ")");
  const TorusLayout layout = torus_layout(spec);
  const std::size_t columns = layout.columns.size();
  const TorusPropagator prop = propagate_torus(spec.n, columns);
  if (prop.states.back() != prop.states.front())
    throw Error("torus propagation does not close after " + std::to_string(columns) + " columns");

  ZColoring c{IntVector(layout.diagram.arc_count)};
  std::vector<bool> assigned(layout.diagram.arc_count, false);
  for (std::size_t j = 0; j < columns; ++j) {
    IntVector x = prop.states[j];
    // The mirror column is the positive one with strand positions reversed.
    if (spec.p < 0) std::reverse(x.begin(), x.end());
    for (std::size_t i = 0; i < spec.n; ++i) {
      const ArcIndex a = layout.columns[j][i];
      if (assigned[a] && c.colors[a] != x[i])
        throw Error("inconsistent propagated color on arc " + std::to_string(a));
      c.colors[a] = x[i];
      assigned[a] = true;
    }
  }
  if (!verify_coloring(layout.diagram, c).ok()) throw Error("propagated torus coloring fails a crossing");
  return c;
}

// ---------------------------------------------------------------------------
// Coloring document: {"diagram": <name>, "colors": [int, ...]}. Colors that
// do not fit in 64 bits are written as decimal strings.

inline nlohmann::json coloring_to_json(const std::string& diagram_name, const ZColoring& c) {
  nlohmann::json j;
  j["diagram"] = diagram_name;
  auto& colors = j["colors"] = nlohmann::json::array();
  for (const auto& x : c.colors) {
    if (x.fits_slong_p())
      colors.push_back(x.get_si());
    else
      colors.push_back(x.get_str());
  }
  return j;
}

inline std::string serialize_coloring(const std::string& diagram_name, const ZColoring& c) {
  return coloring_to_json(diagram_name, c).dump();
}

struct ColoringDocument {
  std::string diagram;
  ZColoring coloring;
};

inline ColoringDocument parse_coloring(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("coloring document must be a JSON object");
  ColoringDocument doc;
  if (j.contains("diagram")) {
    if (!j["diagram"].is_string()) throw ParseError("field 'diagram': expected a string");
    doc.diagram = j["diagram"].get<std::string>();
  }
  if (!j.contains("colors") || !j["colors"].is_array()) throw ParseError("field 'colors': expected an array");
  const auto& colors = j["colors"];
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const auto& x = colors[i];
    if (x.is_number_integer()) {
      doc.coloring.colors.emplace_back(static_cast<long>(x.get<long long>()));
    } else if (x.is_string()) {
      Int v;
      if (v.set_str(x.get<std::string>(), 10) != 0)
        throw ParseError("field 'colors[" + std::to_string(i) + "]': not an integer");
      doc.coloring.colors.push_back(std::move(v));
    } else {
      throw ParseError("field 'colors[" + std::to_string(i) + "]': expected an integer");
    }
  }
  return doc;
}

}  // namespace zcolor
