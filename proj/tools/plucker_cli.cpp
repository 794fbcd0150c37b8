// SPDX-License-Identifier: Apache-2.0
//
// plucker: exact harmonic-sequence invariants and index lower bounds for
// rational curves in CP^n.
//
// Exit codes: 0 success, 2 malformed input, 3 curve not full, 4 violated
// internal identity (a bug, not bad input), 5 example corpus mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plucker/example_corpus.hpp"
#include "plucker/json_io.hpp"
#include "plucker/poly_expr.hpp"

namespace {

using namespace plucker;

enum exit_code : int {
  exit_ok = 0,
  exit_parse = 2,
  exit_not_full = 3,
  exit_inconsistent = 4,
  exit_corpus_mismatch = 5,
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::vector<int> parse_rho_selection(const std::string& text, int n) {
  std::vector<int> rhos;
  if (text == "all") {
    for (int rho = 0; rho <= n; ++rho) rhos.push_back(rho);
    return rhos;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int rho = 0;
    try {
      rho = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw parse_error("--rho: \"" + item + "\" is not an integer");
    }
    if (used != item.size()) throw parse_error("--rho: \"" + item + "\" is not an integer");
    if (rho < 0 || rho > n)
      throw parse_error("--rho: " + std::to_string(rho) + " outside 0.." + std::to_string(n));
    rhos.push_back(rho);
  }
  if (rhos.empty()) throw parse_error("--rho: empty selection");
  return rhos;
}

std::vector<bigint> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<bigint> values;
  if (text.empty()) return values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(parse_bigint(item));
    } catch (const parse_error&) {
      throw parse_error(flag + ": \"" + item + "\" is not an integer");
    }
  }
  return values;
}

std::string join_bigints(const std::vector<bigint>& vs) {
  std::string out = "(";
  for (size_t j = 0; j < vs.size(); ++j) out += (j ? ", " : "") + vs[j].str();
  return out + ")";
}

void print_aligned(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows,
                   const std::string& indent) {
  size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  for (const auto& [label, value] : rows)
    os << indent << label << std::string(width - label.size(), ' ') << " = " << value << "\n";
}

void render_curve(std::ostream& os, const projective_curve& c) {
  os << "curve: [";
  for (size_t i = 0; i < c.components().size(); ++i)
    os << (i ? ", " : "") << c.components()[i].str();
  os << "]  (n = " << c.n() << ", degree = " << c.degree() << ")\n";
}

void render_invariants(std::ostream& os, const sequence_invariants& inv) {
  os << "harmonic sequence invariants:\n";
  print_aligned(os,
                {{"deg(f)", inv.deg_f.str()},
                 {"d (associated degrees)", join_bigints(inv.d)},
                 {"G (common-zero totals)", join_bigints(inv.G)},
                 {"r (ramification)", join_bigints(inv.r)},
                 {"Gauss-transform degrees", join_bigints(inv.map_deg)}},
                "  ");
}

void render_verification(std::ostream& os, const verification_report& rep) {
  os << "verification: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  print_aligned(os,
                {{"recursion residuals", join_bigints(rep.recursion_residuals)},
                 {"ramrelation residual", rep.ramrelation_residual.str()},
                 {"degree residuals", join_bigints(rep.degree_residuals)}},
                "  ");
}

void render_bounds(std::ostream& os, const bound_report& rep) {
  os << "rho = " << rep.rho << (rep.applicable ? "  [applicable]" : "  [not applicable]") << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("deg(phi)", rep.deg_phi.str());
  if (rep.applicable) {
    rows.emplace_back("baseline bound", rep.baseline.str());
    rows.emplace_back("improved bound (deg(f) form)", rep.theorem.str());
    rows.emplace_back("improved bound (deg(phi) form)", rep.corollary.str());
    rows.emplace_back("improvement over baseline",
                      rep.improvement.str() + (rep.improves ? "  (improves)" : "  (no gain)"));
  }
  print_aligned(os, rows, "  ");
  if (!rep.notes.empty()) os << "  note: " << rep.notes << "\n";
}

bound_report bounds_for(const sequence_invariants& inv, int rho) {
  const directrix_invariants dir = directrix_from_sequence(inv, rho);
  if (inv.n == 2 && rho == 1 && (inv.g == 0 || inv.g == 1)) return cp2_bounds(dir);
  return evaluate_bounds(dir);
}

int analyze_command(const projective_curve& curve, const std::string& rho_text,
                    const std::string& format, const json* extra) {
  const sequence_invariants inv = invariants(curve);
  const verification_report ver = verify_plucker(inv);
  const std::vector<int> rhos = parse_rho_selection(rho_text, inv.n);

  std::vector<bound_report> reports;
  reports.reserve(rhos.size());
  for (int rho : rhos) reports.push_back(bounds_for(inv, rho));

  if (format == "json") {
    json out{{"curve", curve_to_json(curve)},
             {"invariants", to_json(inv)},
             {"verification", to_json(ver)}};
    json arr = json::array();
    for (const bound_report& rep : reports) arr.push_back(to_json(rep));
    out["bounds"] = std::move(arr);
    if (extra) out.update(*extra);
    std::cout << out.dump(2) << "\n";
  } else {
    if (extra)
      for (const auto& [key, value] : extra->items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    render_curve(std::cout, curve);
    render_invariants(std::cout, inv);
    render_verification(std::cout, ver);
    std::cout << "index bounds:\n";
    for (const bound_report& rep : reports) render_bounds(std::cout, rep);
  }
  return ver.pass ? exit_ok : exit_inconsistent;
}

int examples_command(const std::string& filter, const std::string& format) {
  bool all_match = true;
  json json_rows = json::array();
  size_t name_width = 0;
  std::vector<corpus_outcome> outcomes;
  for (const example_record& rec : builtin_corpus()) {
    if (!filter.empty() && rec.name.find(filter) == std::string::npos) continue;
    outcomes.push_back(run_example(rec));
    name_width = std::max(name_width, rec.name.size());
  }
  for (const corpus_outcome& out : outcomes) {
    all_match = all_match && out.match;
    if (format == "json") {
      json_rows.push_back(
          json{{"name", out.name}, {"match", out.match}, {"mismatches", out.mismatches}});
    } else {
      std::cout << out.name << std::string(name_width - out.name.size() + 2, ' ')
                << (out.match ? "match" : "MISMATCH") << "\n";
      for (const std::string& m : out.mismatches) std::cout << "    " << m << "\n";
    }
  }
  if (format == "json") std::cout << json_rows.dump(2) << "\n";
  if (outcomes.empty()) {
    std::cerr << "no corpus entry matches filter \"" << filter << "\"\n";
    return exit_parse;
  }
  return all_match ? exit_ok : exit_corpus_mismatch;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact harmonic-sequence invariants and index lower bounds for rational curves "
               "in complex projective space"};
  app.require_subcommand(1);

  std::string file, rho_text = "all", format = "text", map_text, filter;
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a curve file");
  analyze->add_option("file", file, "curve JSON document")->required();
  analyze->add_option("--rho", rho_text, "directrix levels: 'all' or comma list")
      ->capture_default_str();
  add_format(analyze);

  CLI::App* verify = app.add_subcommand("verify", "verification report for a curve file");
  verify->add_option("file", file, "curve JSON document")->required();
  add_format(verify);

  CLI::App* compose = app.add_subcommand("compose-analyze",
                                         "precompose a curve with a rational self-map, then analyze");
  compose->add_option("file", file, "curve JSON document")->required();
  compose->add_option("--map", map_text, "self-map NUM_POLY/DEN_POLY, e.g. \"z^3\" or \"(z+1)/(z-1)\"")
      ->required();
  compose->add_option("--rho", rho_text, "directrix levels: 'all' or comma list")
      ->capture_default_str();
  add_format(compose);

  int n = 0, g = 0, rho = 0;
  std::string deg_f_text, r_text;
  CLI::App* bounds = app.add_subcommand("bounds", "index bounds from abstract directrix data");
  bounds->add_option("--n", n, "target dimension CP^n")->required();
  bounds->add_option("--g", g, "domain genus")->required();
  bounds->add_option("--deg-f", deg_f_text, "degree of the directrix map f")->required();
  bounds->add_option("--rho", rho, "number of Gauss transforms")->required();
  bounds->add_option("--r", r_text,
                     "ramification indices r_0,r_1,...: rho entries, or n entries to supply the "
                     "full sequence");
  add_format(bounds);

  CLI::App* examples = app.add_subcommand("examples", "run the built-in example corpus");
  examples->add_option("--filter", filter, "only entries whose name contains this substring");
  add_format(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  if (analyze->parsed()) {
    return analyze_command(curve_from_json(load_json_file(file)), rho_text, format, nullptr);
  }

  if (verify->parsed()) {
    const verification_report rep = verify_plucker(invariants(curve_from_json(load_json_file(file))));
    if (format == "json")
      std::cout << to_json(rep).dump(2) << "\n";
    else
      render_verification(std::cout, rep);
    return rep.pass ? exit_ok : exit_inconsistent;
  }

  if (compose->parsed()) {
    const projective_curve base = curve_from_json(load_json_file(file));
    auto [num, den] = parse_self_map_expr(map_text);
    const projective_curve composed = precompose(base, rational_self_map(num, den));
    const json extra{{"map", map_text}};
    return analyze_command(composed, rho_text, format, &extra);
  }

  if (bounds->parsed()) {
    bigint deg_f;
    try {
      deg_f = parse_bigint(deg_f_text);
    } catch (const parse_error&) {
      throw parse_error("--deg-f: \"" + deg_f_text + "\" is not an integer");
    }
    const std::vector<bigint> r = parse_int_list(r_text, "--r");
    std::optional<std::vector<bigint>> r_full;
    std::vector<bigint> r_prefix = r;
    if (static_cast<int>(r.size()) == n && n != rho) {
      r_full = r;
      r_prefix.assign(r.begin(), r.begin() + rho);
    } else if (static_cast<int>(r.size()) != rho) {
      throw parse_error("--r: expected " + std::to_string(rho) + " (prefix) or " +
                        std::to_string(n) + " (full) entries, got " + std::to_string(r.size()));
    }
    const directrix_invariants dir(n, g, deg_f, rho, std::move(r_prefix), std::move(r_full));
    const bound_report rep =
        (n == 2 && rho == 1 && (g == 0 || g == 1)) ? cp2_bounds(dir) : evaluate_bounds(dir);
    if (format == "json") {
      std::cout << to_json(rep).dump(2) << "\n";
    } else {
      std::cout << "directrix: n = " << rep.n << ", g = " << rep.g << ", deg(f) = "
                << rep.deg_f.str() << ", r = " << join_bigints(rep.r_prefix) << "\n";
      render_bounds(std::cout, rep);
    }
    return exit_ok;
  }

  return examples_command(filter, format);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const internal_inconsistency& e) {
    std::cerr << "internal inconsistency (please report): " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const not_full& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_not_full;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_parse;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
}
