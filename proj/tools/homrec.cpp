// homrec: fixture generation, analysis, invariant suites and DOT export.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homrec/critical.hpp"
#include "homrec/errors.hpp"
#include "homrec/fixtures.hpp"
#include "homrec/parallel.hpp"
#include "homrec/reconstruct.hpp"
#include "homrec/serialize.hpp"
#include "homrec/srcheck.hpp"
#include "homrec/structure.hpp"
#include "homrec/suites.hpp"

namespace {

using namespace homrec;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct GenerateArgs {
  std::string fixture;
  long long n = -1;
  long long m = -1;
  int c = 0;
  int phase = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  bool seed_given = false;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + out);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

/// Accepts a bare coloring, a fixture file ({"coloring": ...}) or a pair file
/// ({"phi": ...}).
Coloring load_coloring(const std::string& path) {
  const Json j = read_json(path);
  if (j.is_object() && j.contains("coloring")) return coloring_from_json(j.at("coloring"));
  if (j.is_object() && j.contains("phi")) return coloring_from_json(j.at("phi"));
  return coloring_from_json(j);
}

Vertex need_n(const GenerateArgs& a, long long lo, long long hi) {
  if (a.n < lo || a.n > hi) {
    throw Error(ErrorKind::InvalidLength, a.fixture + " needs --n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<Vertex>(a.n);
}

int cmd_generate(const GenerateArgs& a, const std::string& out) {
  Json doc{{"schema_version", kSchemaVersion}};
  Json fixture{{"name", a.fixture}};
  auto single = [&](const Coloring& phi) { doc["coloring"] = to_json(phi); };
  auto pair = [&](const Coloring& phi, const Coloring& psi) {
    doc["phi"] = to_json(phi);
    doc["psi"] = to_json(psi);
    doc["sum"] = to_json(boolean_sum(phi, psi));
  };

  if (a.fixture == "partition") {
    const Vertex n = need_n(a, 2, 4096);
    fixture["n"] = n;
    single(fixtures::partition(n));
  } else if (a.fixture == "fig-critical-pair") {
    single(fixtures::fig_critical_pair());
  } else if (a.fixture == "fig-critical-cycle") {
    const auto [phi, psi] = fixtures::fig_critical_cycle_pair();
    pair(phi, psi);
  } else if (a.fixture == "fig-no-critical-pair") {
    single(fixtures::fig_no_critical_pair());
  } else if (a.fixture == "fig-homsum") {
    const auto [phi, psi] = fixtures::fig_homsum();
    pair(phi, psi);
  } else if (a.fixture == "fig-two-cycles") {
    single(fixtures::fig_two_cycles());
  } else if (a.fixture == "alpha") {
    const Vertex n = need_n(a, 3, 4096);
    const int seed = a.seed_given ? static_cast<int>(a.seed) : 1;
    if (seed != 0 && seed != 1) throw Error(ErrorKind::InvalidLength, "alpha needs --seed 0 or 1");
    fixture["n"] = n;
    fixture["seed"] = seed;
    single(alpha_coloring(n, seed));
  } else if (a.fixture == "path-pair" || a.fixture == "cycle-pair") {
    if (a.m < 4 || a.m > 4096) throw Error(ErrorKind::InvalidLength, a.fixture + " needs --m >= 4");
    const auto m = static_cast<Vertex>(a.m);
    fixture["m"] = m;
    fixture["c"] = a.c;
    fixture["phase"] = a.phase;
    const auto [phi, psi] = a.fixture == "path-pair" ? make_path_pair(m, a.c, a.phase) : make_cycle_pair(m, a.c, a.phase);
    pair(phi, psi);
  } else if (a.fixture == "random") {
    const Vertex n = need_n(a, 2, 4096);
    fixture["n"] = n;
    fixture["density"] = a.density;
    fixture["seed"] = a.seed;
    single(fixtures::random(n, a.density, a.seed));
  } else {
    throw Error(ErrorKind::Parse, "unknown fixture '" + a.fixture + "'");
  }
  // keep "fixture" right after the version
  Json ordered{{"schema_version", kSchemaVersion}, {"fixture", fixture}};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "schema_version") ordered[it.key()] = it.value();
  emit(ordered.dump(2) + "\n", out);
  return kExitOk;
}

std::string pair_text(Pair p) { return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}"; }

std::string edges_text(const EdgeSet& e) {
  std::string s;
  for (const Pair& p : e.members()) s += (s.empty() ? "" : " ") + pair_text(p);
  return s;
}

int cmd_analyze(const std::string& in, const std::string& mode_name, std::uint64_t budget_nodes, Vertex ceiling,
                bool json, const std::string& out) {
  const Coloring phi = load_coloring(in);
  if (phi.n() < 3) throw Error(ErrorKind::TooSmall, "analysis needs at least 3 vertices");
  RMode mode;
  if (mode_name == "exhaustive") {
    mode = RMode::Exhaustive;
  } else if (mode_name == "structural") {
    mode = RMode::StructuralOnly;
  } else {
    throw Error(ErrorKind::Parse, "--mode must be exhaustive or structural");
  }
  SearchBudget budget{budget_nodes, ceiling, threads_from_env()};

  const auto homs = phi.n() <= 64 ? hom_sets(phi) : std::vector<HomSet>{};
  const auto pairs = find_critical_pairs(phi);
  const auto cycles = phi.n() >= 5 ? find_critical_cycles(phi, {}, budget.threads) : std::vector<CriticalCycleWitness>{};
  const RMembership membership = in_R(phi, budget);
  const RValueReport report = r_value(phi, mode, budget);

  if (json) {
    Json hom = Json::array();
    for (const auto& h : homs) hom.push_back({{"vertices", h.vertices}, {"color", h.color}});
    Json cp = Json::array();
    for (const Pair& p : pairs) cp.push_back({p.lo, p.hi});
    Json cc = Json::array();
    for (const auto& w : cycles) cc.push_back(to_json(w));
    const Json doc{{"schema_version", kSchemaVersion},
                   {"coloring", to_json(phi)},
                   {"hom_sets", hom},
                   {"critical_pairs", cp},
                   {"critical_cycles", cc},
                   {"membership", to_json(membership)},
                   {"r_value", to_json(report)}};
    emit(doc.dump(2) + "\n", out);
    return kExitOk;
  }

  std::ostringstream s;
  auto row = [&](const std::string& key, const std::string& value) {
    s << key << std::string(key.size() < 18 ? 18 - key.size() : 1, ' ') << value << "\n";
  };
  row("vertices", std::to_string(phi.n()));
  row("ones", std::to_string(ones(phi).size()) + " of " + std::to_string(phi.pair_count()));
  std::size_t hom0 = 0;
  for (const auto& h : homs) hom0 += h.color == 0;
  row("max hom sets", std::to_string(homs.size()) + " (color 0: " + std::to_string(hom0) +
                          ", color 1: " + std::to_string(homs.size() - hom0) + ")");
  std::string cp;
  for (const Pair& p : pairs) cp += (cp.empty() ? "" : " ") + pair_text(p);
  row("critical pairs", std::to_string(pairs.size()) + (cp.empty() ? "" : "  " + cp));
  row("critical cycles", std::to_string(cycles.size()));
  for (const auto& w : cycles) {
    row("", "(" + std::to_string(w.quad[0]) + "," + std::to_string(w.quad[1]) + "," + std::to_string(w.quad[2]) + "," +
                std::to_string(w.quad[3]) + ") " + std::string(to_string(w.orientation)));
  }
  row("membership", std::string(to_string(membership.verdict)) +
                        (membership.witness ? "  " + edges_text(membership.witness->difference) : ""));
  row("r", report.r ? std::to_string(*report.r)
                    : report.status == RStatus::NotApplicable ? "not applicable" : "unknown");
  row("mode", std::string(to_string(report.mode)) + (report.complete ? ", complete" : ", incomplete"));
  row("minimal witnesses", std::to_string(report.witnesses.size()));
  for (const auto& w : report.witnesses) row("", edges_text(w.difference));
  emit(s.str(), out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, SuiteOptions options, bool json, const std::string& out) {
  options.threads = threads_from_env();
  const SuiteResult result = run_suite(suite, options);
  if (json) {
    const Json doc{{"schema_version", kSchemaVersion},
                   {"suite", result.suite},
                   {"passed", result.passed},
                   {"cases", result.cases},
                   {"lines", result.lines},
                   {"counterexample", result.counterexample ? Json(*result.counterexample) : Json(nullptr)}};
    emit(doc.dump(2) + "\n", out);
  } else {
    std::string text;
    for (const auto& l : result.lines) text += l + "\n";
    emit(text, out);
  }
  return result.passed ? kExitOk : kExitFail;
}

int cmd_export_dot(const std::string& in, const std::string& highlight, const std::string& out) {
  const Coloring phi = load_coloring(in);
  EdgeSet marked(phi.n());
  if (highlight == "critical") {
    for (const Pair& p : find_critical_pairs(phi)) marked.insert(p.lo, p.hi);
    if (phi.n() >= 5)
      for (const auto& w : find_critical_cycles(phi))
        for (const Pair& p : w.edges.members()) marked.insert(p.lo, p.hi);
  } else if (highlight != "none") {
    throw Error(ErrorKind::Parse, "--highlight must be critical or none");
  }
  emit(to_dot(phi, marked), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous-set reconstruction of 2-colorings"};
  app.require_subcommand(1);
  std::string out;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a fixture coloring as JSON");
  generate->add_option("fixture", gen.fixture,
                       "partition | fig-critical-pair | fig-critical-cycle | fig-no-critical-pair | fig-homsum | "
                       "fig-two-cycles | alpha | path-pair | cycle-pair | random")
      ->required();
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--m", gen.m, "Component size for path-pair / cycle-pair");
  generate->add_option("--c", gen.c, "Class color for path-pair / cycle-pair")->check(CLI::Range(0, 1));
  generate->add_option("--phase", gen.phase, "Edge phase for path-pair / cycle-pair")->check(CLI::Range(0, 1));
  generate->add_option("--density", gen.density, "Probability of color 1 (random)")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen.seed, "RNG seed (random) or seed bit (alpha)");
  generate->add_option("--out", out, "Output path (default stdout)");

  std::string in;
  std::string mode = "exhaustive";
  std::uint64_t budget = 0;
  unsigned max_n = kDefaultExhaustiveCeiling;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Report hom sets, critical structure, membership in R and r");
  analyze->add_option("input", in, "Coloring JSON")->required();
  analyze->add_option("--mode", mode, "exhaustive | structural");
  analyze->add_option("--budget", budget, "Search-node budget, 0 = unlimited");
  analyze->add_option("--max-n", max_n, "Largest n searched exhaustively")->check(CLI::Range(3u, 8u));
  analyze->add_flag("--json", json, "Machine-readable output");
  analyze->add_option("--out", out, "Output path (default stdout)");

  std::string suite;
  SuiteOptions options;
  unsigned vn = 5;
  unsigned nmax = 20;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "oracle | claws | parity | partition-theorem | r-sweep | connectivity | alpha | theorem63")
      ->required();
  verify->add_option("--n", vn, "Vertex count")->check(CLI::Range(3u, 11u));
  verify->add_flag("--exhaustive", options.exhaustive, "Enumerate every coloring instead of sampling");
  verify->add_option("--samples", options.samples, "Random colorings per sampled sweep");
  verify->add_option("--seed", options.seed, "First RNG seed");
  verify->add_option("--nmax", nmax, "Largest n for the alpha suite")->check(CLI::Range(8u, 64u));
  verify->add_option("--max-n", nmax, "Alias of --nmax")->check(CLI::Range(8u, 64u));
  verify->add_flag("--json", json, "Machine-readable output");
  verify->add_option("--out", out, "Output path (default stdout)");

  std::string highlight = "critical";
  auto* dot = app.add_subcommand("export-dot", "Render a coloring as Graphviz DOT");
  dot->add_option("input", in, "Coloring JSON")->required();
  dot->add_option("--highlight", highlight, "critical | none");
  dot->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  gen.seed_given = generate->count("--seed") > 0;

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*analyze) return cmd_analyze(in, mode, budget, static_cast<Vertex>(max_n), json, out);
    if (*verify) {
      options.n = static_cast<Vertex>(vn);
      options.nmax = static_cast<Vertex>(nmax);
      return cmd_verify(suite, options, json, out);
    }
    if (*dot) return cmd_export_dot(in, highlight, out);
  } catch (const Error& e) {
    std::cerr << "homrec: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "homrec: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
