#pragma once

// Command-line front end. run_cli() is the whole program; tools/zcolor.cpp
// only forwards argv. Exit codes: 0 success, 1 verification failed or no
// nontrivial coloring, 2 invalid input.

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcolor/coloring.hpp"
#include "zcolor/diagram.hpp"
#include "zcolor/error.hpp"
#include "zcolor/generators.hpp"
#include "zcolor/intlinalg.hpp"
#include "zcolor/mincolor.hpp"

namespace zcolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

// One checked quantity of a named claim. All quantities are exact, so
// expected and computed are compared as rendered strings.
struct VerificationOutcome {
  std::string claim;
  nlohmann::json parameters;
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
};

inline std::string to_text(const Int& x) { return x.get_str(); }

inline std::string to_text(const std::set<Int>& s) {
  std::string r = "{";
  for (auto it = s.begin(); it != s.end(); ++it) r += (it == s.begin() ? "" : ", ") + it->get_str();
  return r + "}";
}

inline std::string to_text(const IntVector& v) {
  std::string r = "(";
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + v[i].get_str();
  return r + ")";
}

inline nlohmann::json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline nlohmann::json int_json(const IntVector& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

inline std::vector<long> parse_twists(const std::string& text) {
  std::vector<long> twists;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UnsupportedInput("twist '" + item + "' is not an integer");
    }
    if (used != item.size()) throw UnsupportedInput("twist '" + item + "' is not an integer");
    twists.push_back(v);
  }
  if (twists.empty()) throw UnsupportedInput("no twists given");
  return twists;
}

// ---------------------------------------------------------------------------
// Claims

namespace detail {

class OutcomeList {
 public:
  OutcomeList(std::string claim, nlohmann::json parameters)
      : claim_(std::move(claim)), parameters_(std::move(parameters)) {}

  void add(std::string check, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    outcomes_.push_back({claim_, parameters_, std::move(check), std::move(expected), std::move(computed), pass});
  }
  // For lower-bound checks the caller decides pass/fail.
  void add(std::string check, std::string expected, std::string computed, bool pass) {
    outcomes_.push_back({claim_, parameters_, std::move(check), std::move(expected), std::move(computed), pass});
  }
  std::vector<VerificationOutcome> take() { return std::move(outcomes_); }

 private:
  std::string claim_;
  nlohmann::json parameters_;
  std::vector<VerificationOutcome> outcomes_;
};

inline std::set<Int> integer_range(long from, long to) {
  std::set<Int> s;
  for (long v = from; v <= to; ++v) s.insert(Int(v));
  return s;
}

}  // namespace detail

// Four colors on the closed-braid diagram of T(pn, n), even n > 2.
inline std::vector<VerificationOutcome> verify_thm1(long p, std::size_t n) {
  if (p == 0) throw HypothesisError("thm1 needs p != 0");
  if (n <= 2 || n % 2 != 0) throw HypothesisError("thm1 needs an even n > 2 (got " + std::to_string(n) + ")");
  const TorusSpec spec{p, n};
  detail::OutcomeList list("thm1", {{"p", p}, {"n", n}});
  const Diagram d = gen_torus(spec);
  const std::size_t columns = static_cast<std::size_t>(std::labs(p)) * n;
  const TorusPropagator prop = propagate_torus(n, columns);
  list.add("propagation closes after " + std::to_string(columns) + " columns", to_text(prop.states.front()),
           to_text(prop.states.back()));
  const ZColoring c = torus_coloring(spec);
  list.add("coloring satisfies every crossing", "valid", verify_coloring(d, c).ok() ? "valid" : "invalid");
  list.add("number of colors", "4", std::to_string(count_colors(c)));
  list.add("color set", to_text(detail::integer_range(0, 3)), to_text(color_values(c)));
  return list.take();
}

// P(n, -n, ..., n, -n) with `strands` regions has only (n + 2)-color colorings.
inline std::vector<VerificationOutcome> verify_thm2(long n, long strands) {
  if (n < 2 || n % 2 != 0) throw HypothesisError("thm2 needs an even n >= 2 (got " + std::to_string(n) + ")");
  if (strands < 4 || strands % 2 != 0)
    throw HypothesisError("thm2 needs an even strand count >= 4 (got " + std::to_string(strands) + ")");
  PretzelSpec spec;
  for (long i = 0; i < strands; ++i) spec.twists.push_back(i % 2 == 0 ? n : -n);
  detail::OutcomeList list("thm2", {{"n", n}, {"strands", strands}});
  const Diagram d = gen_pretzel(spec);
  list.add("kernel dimension", "2", std::to_string(coloring_space(d).dim()));
  const MinColorResult r = min_colors(d);
  list.add("minimal coloring number", std::to_string(n + 2), std::to_string(r.minimum));
  list.add("exact", "true", r.exact ? "true" : "false");
  list.add("color set", to_text(detail::integer_range(0, n + 1)), to_text(color_values(r.witness)));
  return list.take();
}

// P(-n, n+1, n(n+1)) has only (n^2 + n + 3)-color colorings.
inline std::vector<VerificationOutcome> verify_thm3(long n) {
  if (n < 2) throw HypothesisError("thm3 needs n >= 2 (got " + std::to_string(n) + ")");
  detail::OutcomeList list("thm3", {{"n", n}});
  const Diagram d = gen_pretzel({{-n, n + 1, n * (n + 1)}});
  list.add("determinant", "0", to_text(link_determinant(d)));
  list.add("kernel dimension", "2", std::to_string(coloring_space(d).dim()));
  const MinColorResult r = min_colors(d);
  list.add("minimal coloring number", std::to_string(n * n + n + 3), std::to_string(r.minimum));
  list.add("exact", "true", r.exact ? "true" : "false");
  std::set<Int> expected = detail::integer_range(n, (n + 1) * (n + 1));
  expected.insert(Int(0));
  list.add("color set", to_text(expected), to_text(color_set(d)));
  return list.take();
}

inline constexpr std::size_t kFactSamples = 100;

// Nonsplit fixtures never color with fewer than 4 colors; split ones reach 2.
inline std::vector<VerificationOutcome> verify_fact(const std::vector<Diagram>& fixtures) {
  std::vector<VerificationOutcome> all;
  for (const Diagram& d : fixtures) {
    const ColoringSpace space = coloring_space(d);
    if (space.dim() < 2) throw HypothesisError("fact applies to Z-colorable diagrams; '" + d.name + "' is not");
    detail::OutcomeList list("fact", {{"diagram", d.name}});
    const MinColorResult r = min_colors(d);
    if (!is_connected(d)) {
      list.add("minimal coloring number (split diagram)", "2", std::to_string(r.minimum));
      auto part = list.take();
      all.insert(all.end(), part.begin(), part.end());
      continue;
    }
    list.add("minimal coloring number", ">= 4", std::to_string(r.minimum), r.minimum >= 4);

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> coefficient(-5, 5);
    std::size_t ok = 0;
    for (std::size_t s = 0; s < kFactSamples; ++s) {
      IntVector coeffs(space.pinned.size());
      do {
        for (auto& c : coeffs) c = coefficient(rng);
      } while (std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; }));
      IntVector w = combine(space.pinned, coeffs, space.arc_count);
      const Int shift = coefficient(rng);
      for (auto& x : w) x += shift;
      if (count_colors(ZColoring{w}) >= 4) ++ok;
    }
    list.add("random nontrivial colorings with >= 4 colors", std::to_string(kFactSamples) + "/" + std::to_string(kFactSamples),
             std::to_string(ok) + "/" + std::to_string(kFactSamples));
    auto part = list.take();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Driver

namespace detail {

inline bool all_pass(const std::vector<VerificationOutcome>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& o) { return o.pass; });
}

inline void print_outcomes(const std::string& claim, const std::vector<VerificationOutcome>& outcomes, bool json,
                           std::ostream& out) {
  if (json) {
    nlohmann::json j;
    j["claim"] = claim;
    j["pass"] = all_pass(outcomes);
    auto& list = j["outcomes"] = nlohmann::json::array();
    for (const auto& o : outcomes)
      list.push_back({{"check", o.check},
                      {"parameters", o.parameters},
                      {"expected", o.expected},
                      {"computed", o.computed},
                      {"pass", o.pass}});
    out << j.dump() << '\n';
    return;
  }
  for (const auto& o : outcomes) {
    std::string params;
    for (const auto& [k, v] : o.parameters.items())
      params += (params.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    out << o.claim << " [" << params << "] " << o.check << ": expected " << o.expected << ", computed "
        << o.computed << (o.pass ? "  PASS" : "  FAIL") << '\n';
  }
  out << claim << ": " << (all_pass(outcomes) ? "PASS" : "FAIL") << '\n';
}

inline std::string coloring_line(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer colorings of link diagrams"};
  app.name("zcolor");
  app.require_subcommand(1);
  bool json = false;
  std::string output;
  unsigned bound = 6;

  auto* gen = app.add_subcommand("gen", "generate a pretzel or torus diagram");
  gen->require_subcommand(1);
  auto* gen_pretzel_cmd = gen->add_subcommand("pretzel", "pretzel link P(a1,...,ak)");
  std::string twists;
  gen_pretzel_cmd->add_option("twists", twists, "comma-separated nonzero twists, e.g. 2,-2,2,-2")->required();
  auto* gen_torus_cmd = gen->add_subcommand("torus", "torus link T(pn,n) as a closed braid");
  long torus_p = 0;
  std::size_t torus_n = 0;
  gen_torus_cmd->add_option("--p", torus_p, "nonzero twist multiplier")->required();
  gen_torus_cmd->add_option("--n", torus_n, "strand count (>= 2)")->required();
  for (auto* c : {gen_pretzel_cmd, gen_torus_cmd}) {
    c->add_option("-o,--output", output, "diagram file to write");
    c->add_flag("--json", json, "machine-readable summary");
  }

  std::string diagram_path;
  auto* analyze = app.add_subcommand("analyze", "connectivity, determinant, kernel and colorability");
  analyze->add_option("diagram", diagram_path)->required();
  analyze->add_flag("--json", json);

  auto* mincolor = app.add_subcommand("mincolor", "fewest colors over nontrivial colorings");
  mincolor->add_option("diagram", diagram_path)->required();
  mincolor->add_option("--bound", bound, "coefficient bound for rank > 2 lattices")->check(CLI::PositiveNumber);
  mincolor->add_option("-o,--output", output, "write the witness coloring file");
  mincolor->add_flag("--json", json);

  auto* det = app.add_subcommand("det", "link determinant");
  det->add_option("diagram", diagram_path)->required();
  det->add_flag("--json", json);

  auto* color = app.add_subcommand("color", "check a coloring file against a diagram");
  std::string coloring_path;
  bool normalize_flag = false;
  color->add_option("diagram", diagram_path)->required();
  color->add_option("coloring", coloring_path)->required();
  color->add_flag("--normalize", normalize_flag, "normalize (min 0, gcd 1) before writing");
  color->add_option("-o,--output", output, "write the (normalized) coloring file");
  color->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "check a theorem on generated diagrams");
  verify->require_subcommand(1);
  long v_p = 0, v_n = 0, v_strands = 4;
  auto* thm1 = verify->add_subcommand("thm1", "T(pn,n), even n > 2: a 4-color coloring");
  thm1->add_option("--p", v_p)->required();
  thm1->add_option("--n", v_n)->required();
  auto* thm2 = verify->add_subcommand("thm2", "P(n,-n,...): only n+2 colors");
  thm2->add_option("--n", v_n)->required();
  thm2->add_option("--strands", v_strands);
  auto* thm3 = verify->add_subcommand("thm3", "P(-n,n+1,n(n+1)): only n^2+n+3 colors");
  thm3->add_option("--n", v_n)->required();
  auto* fact = verify->add_subcommand("fact", "at least 4 colors on nonsplit fixtures");
  std::vector<std::string> fixture_paths;
  fact->add_option("fixtures", fixture_paths, "diagram files")->required();
  for (auto* c : {thm1, thm2, thm3, fact}) c->add_flag("--json", json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zcolor: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      const Diagram d = gen_pretzel_cmd->parsed() ? gen_pretzel(PretzelSpec{parse_twists(twists)})
                                                  : gen_torus(TorusSpec{torus_p, torus_n});
      if (output.empty() && !json) {
        out << serialize_diagram(d) << '\n';
        return kExitOk;
      }
      if (!output.empty()) save_diagram(output, d);
      if (json) {
        nlohmann::json j{{"name", d.name}, {"crossings", d.crossing_count()}, {"arcs", d.arc_count}};
        if (output.empty())
          j["diagram"] = diagram_to_json(d);
        else
          j["output"] = output;
        out << j.dump() << '\n';
      } else {
        out << d.name << ": " << d.crossing_count() << " crossings, " << d.arc_count << " arcs -> " << output
            << '\n';
      }
      return kExitOk;
    }

    if (analyze->parsed()) {
      const Diagram d = load_diagram(diagram_path);
      const bool connected = is_connected(d);
      const ColoringSpace space = coloring_space(d);
      std::optional<Int> determinant;
      if (connected && d.arc_count == d.crossing_count()) determinant = link_determinant(d);
      std::optional<IntVector> sample;
      if (!space.pinned.empty()) sample = normalize(ZColoring{space.pinned.front()}).colors;
      if (json) {
        nlohmann::json j{{"diagram", d.name},
                         {"arcs", d.arc_count},
                         {"crossings", d.crossing_count()},
                         {"free_circles", d.free_circles},
                         {"connected", connected},
                         {"kernel_dimension", space.dim()},
                         {"z_colorable", space.dim() >= 2}};
        j["determinant"] = determinant ? int_json(*determinant) : nlohmann::json(nullptr);
        j["sample_coloring"] = sample ? int_json(*sample) : nlohmann::json(nullptr);
        out << j.dump() << '\n';
      } else {
        out << "diagram: " << d.name << '\n'
            << "arcs: " << d.arc_count << '\n'
            << "crossings: " << d.crossing_count() << '\n'
            << "free circles: " << d.free_circles << '\n'
            << "connected: " << (connected ? "yes" : "no") << '\n'
            << "determinant: " << (determinant ? determinant->get_str() : "undefined") << '\n'
            << "kernel dimension: " << space.dim() << '\n'
            << "z-colorable: " << (space.dim() >= 2 ? "yes" : "no") << '\n';
        if (sample) out << "sample coloring: " << detail::coloring_line(*sample) << '\n';
      }
      return kExitOk;
    }

    if (mincolor->parsed()) {
      const Diagram d = load_diagram(diagram_path);
      const MinColorResult r = min_colors(d, bound);
      if (!output.empty()) write_text_file(output, serialize_coloring(d.name, r.witness) + "\n");
      if (json) {
        out << nlohmann::json{{"diagram", d.name},
                              {"minimum", r.minimum},
                              {"exact", r.exact},
                              {"bound_used", r.bound_used},
                              {"witness", int_json(r.witness.colors)}}
                   .dump()
            << '\n';
      } else {
        out << "diagram: " << d.name << '\n'
            << "minimum colors: " << r.minimum << '\n'
            << "exact: " << (r.exact ? "yes" : "no") << '\n'
            << "bound used: " << r.bound_used << '\n'
            << "color set: " << to_text(color_values(r.witness)) << '\n'
            << "witness: " << detail::coloring_line(r.witness.colors) << '\n';
      }
      return kExitOk;
    }

    if (det->parsed()) {
      const Diagram d = load_diagram(diagram_path);
      const Int value = link_determinant(d);
      if (json)
        out << nlohmann::json{{"diagram", d.name}, {"determinant", int_json(value)}}.dump() << '\n';
      else
        out << value.get_str() << '\n';
      return kExitOk;
    }

    if (color->parsed()) {
      const Diagram d = load_diagram(diagram_path);
      ColoringDocument doc = parse_coloring(read_text_file(coloring_path));
      if (!doc.diagram.empty() && doc.diagram != d.name)
        err << "zcolor: warning: coloring is for '" << doc.diagram << "', diagram is '" << d.name << "'\n";
      const CrossingCheck check = verify_coloring(d, doc.coloring);
      ZColoring result = normalize_flag ? normalize(doc.coloring) : doc.coloring;
      if (!output.empty() && check.ok()) write_text_file(output, serialize_coloring(d.name, result) + "\n");
      if (json) {
        nlohmann::json j{{"diagram", d.name},
                         {"valid", check.ok()},
                         {"failed_crossings", check.failed_crossings},
                         {"colors", count_colors(doc.coloring)}};
        if (normalize_flag) j["normalized"] = int_json(result.colors);
        out << j.dump() << '\n';
      } else if (check.ok()) {
        out << "valid coloring of " << d.name << " with " << count_colors(doc.coloring) << " colors\n";
        if (normalize_flag) out << "normalized: " << detail::coloring_line(result.colors) << '\n';
      } else {
        std::string where;
        for (auto c : check.failed_crossings) where += (where.empty() ? "" : ",") + std::to_string(c);
        out << "invalid coloring of " << d.name << ": relation fails at crossings " << where << '\n';
      }
      return check.ok() ? kExitOk : kExitFailed;
    }

    if (verify->parsed()) {
      std::vector<VerificationOutcome> outcomes;
      std::string claim;
      if (thm1->parsed()) {
        claim = "thm1";
        if (v_n < 0) throw HypothesisError("thm1 needs an even n > 2");
        outcomes = verify_thm1(v_p, static_cast<std::size_t>(v_n));
      } else if (thm2->parsed()) {
        claim = "thm2";
        outcomes = verify_thm2(v_n, v_strands);
      } else if (thm3->parsed()) {
        claim = "thm3";
        outcomes = verify_thm3(v_n);
      } else {
        claim = "fact";
        std::vector<Diagram> fixtures;
        for (const auto& p : fixture_paths) fixtures.push_back(load_diagram(p));
        outcomes = verify_fact(fixtures);
      }
      detail::print_outcomes(claim, outcomes, json, out);
      return detail::all_pass(outcomes) ? kExitOk : kExitFailed;
    }
  } catch (const NoNontrivialColoring& e) {
    err << "zcolor: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "zcolor: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace zcolor::cli
