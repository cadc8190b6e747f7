#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "d2tk/analysis.hpp"
#include "d2tk/catalog.hpp"
#include "d2tk/color.hpp"
#include "d2tk/discharge.hpp"
#include "d2tk/error.hpp"
#include "d2tk/falsify.hpp"
#include "d2tk/gen.hpp"
#include "d2tk/rotg.hpp"

using namespace d2tk;
using json = nlohmann::json;

namespace {

int pick_delta(const PlaneGraph& g, const std::string& arg) {
  if (arg != "auto") return std::stoi(arg);
  int d = g.max_degree();
  if (d < 6 || d > 8)
    throw Error(ErrorCode::UnsupportedDelta, "Δ=" + std::to_string(d) + " is outside 6..8");
  return d;
}

int cmd_analyze(const std::string& file) {
  PlaneGraph g = read_rotg_file(file);
  std::cout << "v d m3 m4 t d2 class\n";
  ProfileTable table(g, -1);
  for (VertexId v : g.vertices()) {
    const auto& p = table[v];
    std::cout << v << ' ' << p.degree << ' ' << p.m3 << ' ' << p.m4 << ' ' << p.t << ' ' << p.d2
              << ' ' << p.cls.to_string() << '\n';
  }
  return 0;
}

int cmd_detect(const std::string& file, const std::string& delta, bool as_json) {
  PlaneGraph g = read_rotg_file(file);
  int d = pick_delta(g, delta);
  auto found = detect(g, d);
  if (!as_json) {
    for (const auto& c : found) std::cout << format_configuration(c) << '\n';
    return 0;
  }
  json out = json::array();
  for (const auto& c : found) {
    json chords = json::array();
    for (auto [a, b] : c.recipe.chords) chords.push_back({a, b});
    out.push_back({{"id", c.id},
                   {"delta_case", c.delta_case},
                   {"center", c.center},
                   {"witnesses", c.witnesses},
                   {"delete", c.recipe.remove},
                   {"chords", chords},
                   {"clause", c.clause}});
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_discharge(const std::string& file, const std::string& delta, bool transfers, bool rules) {
  PlaneGraph g = read_rotg_file(file);
  auto rs = rule_set(pick_delta(g, delta));
  if (rules) {
    std::cout << format_rule_set(rs);
    return 0;
  }
  auto ledger = apply_rules(g, rs);
  std::cout << "kind id initial final\n";
  for (const auto& [e, c] : ledger.final)
    std::cout << (e.kind == Element::Vertex ? "vertex " : "face ") << e.id << ' '
              << format_charge(ledger.initial.at(e)) << ' ' << format_charge(c) << '\n';
  std::cout << "total " << format_charge(ledger.total_initial()) << ' '
            << format_charge(ledger.total_final()) << '\n';
  if (transfers) {
    std::cout << "transfers\n";
    for (const auto& t : ledger.transfers)
      std::cout << t.rule << ' ' << t.from.to_string() << " -> " << t.to.to_string() << ' '
                << format_charge(t.amount) << '\n';
  }
  return 0;
}

int cmd_color(const std::string& file, const std::string& method, bool trace) {
  PlaneGraph g = read_rotg_file(file);
  ColoringCertificate cert;
  if (method == "constructive") cert = color_constructive(g);
  else if (method == "exact") cert = exact_chi2(g).second;
  else cert = greedy(g);
  for (VertexId v : g.vertices()) std::cout << v << ' ' << cert.assignment[v] << '\n';
  std::cout << "palette=" << cert.palette_size << " bound=" << 2 * g.max_degree() + 7
            << " method=" << cert.method << '\n';
  if (trace)
    for (const auto& s : cert.trace) std::cout << "trace " << format_trace_step(s) << '\n';
  return cert.valid ? 0 : 1;
}

int cmd_gen(GenSpec spec, int count) {
  for (int i = 0; i < count; ++i) {
    GenSpec s = spec;
    if (count > 1) {
      s.seed = mix_seed(spec.seed, static_cast<uint64_t>(i));
      std::cout << "# graph " << i << '\n';
    }
    std::cout << to_rotg(generate(s));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-distance coloring toolkit for plane graphs"};
  app.require_subcommand(1);

  std::string file, delta = "auto", method = "constructive";
  bool as_json = false, transfers = false, rules = false, trace = false;

  auto* analyze = app.add_subcommand("analyze", "per-vertex profile table");
  analyze->add_option("file", file, "ROTG file")->required();

  auto* det = app.add_subcommand("detect", "list reducible configurations");
  det->add_option("file", file, "ROTG file")->required();
  det->add_option("--delta", delta, "auto|6|7|8")->check(CLI::IsMember({"auto", "6", "7", "8"}));
  det->add_flag("--json", as_json, "JSON output");

  auto* dis = app.add_subcommand("discharge", "charge ledger");
  dis->add_option("file", file, "ROTG file")->required();
  dis->add_option("--delta", delta, "auto|6|7|8")->check(CLI::IsMember({"auto", "6", "7", "8"}));
  dis->add_flag("--transfers", transfers, "list every transfer");
  dis->add_flag("--rules", rules, "print the rule set and exit");

  auto* col = app.add_subcommand("color", "2-distance coloring");
  col->add_option("file", file, "ROTG file")->required();
  col->add_option("--method", method, "constructive|exact|greedy")
      ->check(CLI::IsMember({"constructive", "exact", "greedy"}));
  col->add_flag("--trace", trace, "print the reduction log");

  FalsifyOptions fo;
  auto* fal = app.add_subcommand("falsify", "check invariants on generated graphs");
  fal->add_option("--seed", fo.seed);
  fal->add_option("--count", fo.count)->check(CLI::NonNegativeNumber);
  fal->add_option("--n", fo.n)->check(CLI::Range(4, 100000));
  fal->add_option("--keep", fo.keep)->check(CLI::Range(0.0, 1.0));
  fal->add_option("--threads", fo.threads);
  bool no_color = false;
  fal->add_flag("--no-color", no_color, "skip the coloring check");

  GenSpec gs;
  std::string mode = "triangulation";
  std::vector<int> gen_delta;
  int gen_count = 1;
  auto* gen = app.add_subcommand("gen", "emit generated graphs as ROTG");
  gen->add_option("--seed", gs.seed);
  gen->add_option("--n", gs.n_target);
  gen->add_option("--mode", mode, "triangulation|subsampled|fixture");
  gen->add_option("--fixture", gs.fixture);
  gen->add_option("--keep", gs.edge_keep_probability)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--delta", gen_delta, "accepted Δ values")->delimiter(',');
  gen->add_option("--count", gen_count)->check(CLI::PositiveNumber);
  gen->add_option("--flips", gs.flips);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(file);
    if (*det) return cmd_detect(file, delta, as_json);
    if (*dis) return cmd_discharge(file, delta, transfers, rules);
    if (*col) return cmd_color(file, method, trace);
    if (*fal) {
      const char* dir = std::getenv("D2TK_FINDINGS_DIR");
      fo.findings_dir = dir ? dir : "findings";
      fo.color = !no_color;
      auto report = run_falsify(fo);
      std::cout << format_report(report);
      return report.exit_status();
    }
    if (*gen) {
      gs.mode = parse_gen_mode(mode);
      gs.delta_filter = gen_delta;
      return cmd_gen(gs, gen_count);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::PaletteExceeded ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
