#pragma once

// Combinatorial link diagrams: arcs joined at crossings, each crossing having
// one over-arc and an unordered pair of under-arcs. Planar realizability is
// not checked, so "virtual" data is accepted as long as the counting
// invariants hold.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zcolor/error.hpp"

namespace zcolor {

using ArcIndex = std::size_t;

struct Crossing {
  ArcIndex over = 0;
  std::array<ArcIndex, 2> under{0, 0};  // always sorted ascending

  Crossing() = default;
  Crossing(ArcIndex over_arc, ArcIndex under_a, ArcIndex under_b)
      : over(over_arc), under{std::min(under_a, under_b), std::max(under_a, under_b)} {}

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Diagram {
  std::string name;
  std::size_t arc_count = 0;
  std::size_t free_circles = 0;
  std::vector<Crossing> crossings;
  // Set by generators whose output is a crossing-minimal diagram according
  // to the literature; never computed here.
  bool claimed_minimal = false;

  std::size_t crossing_count() const { return crossings.size(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct ValidationIssue {
  std::string message;
  std::vector<std::size_t> indices;  // offending arc or crossing indices
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }

  std::string summary() const {
    std::string s;
    for (const auto& issue : issues) {
      if (!s.empty()) s += "; ";
      s += issue.message;
    }
    return s;
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

inline ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  std::vector<std::size_t> under_uses(d.arc_count, 0), over_uses(d.arc_count, 0);

  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    for (ArcIndex a : {x.over, x.under[0], x.under[1]}) {
      if (a >= d.arc_count)
        report.issues.push_back({"crossing " + std::to_string(c) + " references arc " +
                                     std::to_string(a) + " but arc_count is " +
                                     std::to_string(d.arc_count),
                                 {c, a}});
    }
    if (x.under[0] > x.under[1])
      report.issues.push_back({"crossing " + std::to_string(c) + " has unsorted under-arcs", {c}});
    if (x.over < d.arc_count) ++over_uses[x.over];
    for (ArcIndex a : x.under)
      if (a < d.arc_count) ++under_uses[a];
  }

  std::vector<std::size_t> bad_count, over_only, unused;
  for (ArcIndex a = 0; a < d.arc_count; ++a) {
    if (under_uses[a] == 0) {
      if (over_uses[a] > 0)
        over_only.push_back(a);
      else
        unused.push_back(a);
    } else if (under_uses[a] != 2) {
      bad_count.push_back(a);
    }
  }
  for (ArcIndex a : bad_count)
    report.issues.push_back({"arc " + std::to_string(a) + " is an under-arc " +
                                 std::to_string(under_uses[a]) + " time(s), expected 2",
                             {a}});
  if (!over_only.empty())
    report.issues.push_back({"arcs " + detail::join_indices(over_only) +
                                 " never pass under a crossing but are over-arcs",
                             over_only});
  if (unused.size() != d.free_circles)
    report.issues.push_back({std::to_string(unused.size()) +
                                 " arc(s) touch no crossing but free_circles is " +
                                 std::to_string(d.free_circles),
                             unused});
  if (report.ok() && d.free_circles == 0 && !d.crossings.empty() &&
      d.arc_count != d.crossings.size())
    report.issues.push_back({"arc_count " + std::to_string(d.arc_count) +
                                 " differs from crossing count " +
                                 std::to_string(d.crossings.size()),
                             {}});
  return report;
}

inline void require_valid(const Diagram& d) {
  if (auto r = validate(d); !r.ok())
    throw ValidationError("invalid diagram '" + d.name + "': " + r.summary());
}

// Connected pieces of the arc/crossing incidence graph, as a label per arc
// (labels are 0..pieces-1 in order of lowest arc index).
inline std::vector<std::size_t> arc_pieces(const Diagram& d, std::size_t* piece_count = nullptr) {
  detail::DisjointSets sets(d.arc_count);
  for (const auto& x : d.crossings) {
    sets.unite(x.over, x.under[0]);
    sets.unite(x.over, x.under[1]);
  }
  std::vector<std::size_t> label(d.arc_count);
  std::vector<std::size_t> root_label(d.arc_count, d.arc_count);
  std::size_t next = 0;
  for (ArcIndex a = 0; a < d.arc_count; ++a) {
    auto r = sets.find(a);
    if (root_label[r] == d.arc_count) root_label[r] = next++;
    label[a] = root_label[r];
  }
  if (piece_count) *piece_count = next;
  return label;
}

// True iff the incidence graph is connected and there are no free circles.
inline bool is_connected(const Diagram& d) {
  if (d.free_circles > 0 || d.arc_count == 0) return false;
  std::size_t pieces = 0;
  arc_pieces(d, &pieces);
  return pieces == 1;
}

// ---------------------------------------------------------------------------
// JSON document format

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

inline std::size_t read_count(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError("field '" + field + "': expected an integer");
  if (j.get<long long>() < 0) throw ParseError("field '" + field + "': must be nonnegative");
  return j.get<std::size_t>();
}

}  // namespace detail

inline nlohmann::json diagram_to_json(const Diagram& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["arc_count"] = d.arc_count;
  j["free_circles"] = d.free_circles;
  if (d.claimed_minimal) j["claimed_minimal"] = true;
  auto& xs = j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings) xs.push_back({{"over", x.over}, {"under", {x.under[0], x.under[1]}}});
  return j;
}

// Structural decoding only; call validate() for the counting invariants.
inline Diagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("diagram document must be a JSON object");
  Diagram d;
  if (!j.contains("name") || !j["name"].is_string()) throw ParseError("field 'name': expected a string");
  d.name = j["name"].get<std::string>();
  if (!j.contains("arc_count")) throw ParseError("field 'arc_count': missing");
  d.arc_count = detail::read_count(j["arc_count"], "arc_count");
  if (j.contains("free_circles")) d.free_circles = detail::read_count(j["free_circles"], "free_circles");
  if (j.contains("claimed_minimal")) {
    if (!j["claimed_minimal"].is_boolean()) throw ParseError("field 'claimed_minimal': expected a boolean");
    d.claimed_minimal = j["claimed_minimal"].get<bool>();
  }
  if (!j.contains("crossings") || !j["crossings"].is_array())
    throw ParseError("field 'crossings': expected an array");
  const auto& xs = j["crossings"];
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const std::string where = "crossings[" + std::to_string(c) + "]";
    const auto& x = xs[c];
    if (!x.is_object() || !x.contains("over") || !x.contains("under"))
      throw ParseError("field '" + where + "': expected {\"over\": int, \"under\": [int, int]}");
    const auto& u = x["under"];
    if (!u.is_array() || u.size() != 2) throw ParseError("field '" + where + ".under': expected two arcs");
    d.crossings.emplace_back(detail::read_count(x["over"], where + ".over"),
                             detail::read_count(u[0], where + ".under[0]"),
                             detail::read_count(u[1], where + ".under[1]"));
  }
  return d;
}

// Deterministic: keys sorted, under-pairs sorted, no whitespace.
inline std::string serialize_diagram(const Diagram& d) { return diagram_to_json(d).dump(); }

// Parses and validates a diagram document.
inline Diagram parse_diagram(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " + e.what());
  }
  Diagram d = diagram_from_json(j);
  require_valid(d);
  return d;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

inline Diagram load_diagram(const std::string& path) { return parse_diagram(read_text_file(path)); }

inline void save_diagram(const std::string& path, const Diagram& d) {
  write_text_file(path, serialize_diagram(d) + "\n");
}

// Disjoint union; arcs of `b` are shifted past those of `a`.
inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram u;
  u.name = a.name + "+" + b.name;
  // Free-circle arcs are not referenced by crossings, so plain offsetting
  // keeps both counts consistent.
  u.arc_count = a.arc_count + b.arc_count;
  u.free_circles = a.free_circles + b.free_circles;
  u.crossings = a.crossings;
  for (const auto& x : b.crossings)
    u.crossings.emplace_back(x.over + a.arc_count, x.under[0] + a.arc_count, x.under[1] + a.arc_count);
  return u;
}

// `count` unlinked circles with no crossings.
inline Diagram free_circles(std::size_t count) {
  Diagram d;
  d.name = std::to_string(count) + " free circle" + (count == 1 ? "" : "s");
  d.arc_count = count;
  d.free_circles = count;
  return d;
}

}  // namespace zcolor
