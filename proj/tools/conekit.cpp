// conekit command-line front end.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conekit/extension.hpp"
#include "conekit/lorentz.hpp"
#include "conekit/scenario.hpp"
#include "conekit/suites.hpp"

using namespace conekit;

namespace {

constexpr int kExitParse = 2;

struct GlobalFlags {
  std::string backend;
  std::optional<double> tol;
  std::string out;
  std::string seed;
};

// Inline JSON, or a path to a JSON file.
Json load_json_arg(const std::string& arg, const char* what) {
  try {
    if (std::filesystem::is_regular_file(arg)) {
      std::ifstream in(arg);
      return Json::parse(in);
    }
    return Json::parse(arg);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParseError, std::string(what) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::kInvalidArgument, "cannot write " + out);
  f << text;
}

RunOptions run_options(const GlobalFlags& g) {
  RunOptions o;
  if (!g.seed.empty()) o.cli_seed = parse_seed(g.seed);
  o.env_seed = seed_from_env();
  if (!g.backend.empty()) o.backend = parse_backend(g.backend);
  o.tol = g.tol;
  return o;
}

std::uint64_t effective_seed(const GlobalFlags& g, std::optional<std::uint64_t> local) {
  const RunOptions o = run_options(g);
  if (o.cli_seed) return *o.cli_seed;
  if (local) return *local;
  if (o.env_seed) return *o.env_seed;
  return 0;
}

int cmd_run(const GlobalFlags& g, const std::string& path) {
  const RunOutcome r = run_scenario_file(path, run_options(g));
  const std::string json = r.report.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << json;
    std::cerr << report_summary(r.report);
  } else {
    emit(json, g.out);
    std::cout << report_summary(r.report);
  }
  return r.exit_code;
}

int cmd_proptest(const GlobalFlags& g, const std::string& suite, std::size_t trials,
                 std::optional<std::uint64_t> seed) {
  const std::uint64_t s = effective_seed(g, seed);
  std::vector<std::string> names;
  if (suite.empty() || suite == "all") {
    for (const auto& info : suite_registry()) names.push_back(info.name);
  } else {
    names.push_back(suite);
  }
  Json out = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, trials, s);
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials << " checks=" << r.checks
              << " failures=" << r.failures;
    if (r.witness) std::cout << " witness=" << *r.witness;
    std::cout << '\n';
    Json j{{"suite", r.name}, {"trials", r.trials}, {"checks", r.checks}, {"failures", r.failures},
           {"seed", s},       {"metrics", r.metrics}};
    if (r.witness) j["witness"] = *r.witness;
    out.push_back(std::move(j));
  }
  if (!g.out.empty()) emit(out.dump(2) + "\n", g.out);
  return ok ? 0 : 1;
}

int cmd_gram(const GlobalFlags& g, const std::string& norm_arg, const std::string& basis_arg) {
  const HyperbolicNorm h = norm_from_json(load_json_arg(norm_arg, "--cone"));
  std::vector<Vector> basis = vectors_from_json(load_json_arg(basis_arg, "--basis"));
  if (!g.backend.empty() && parse_backend(g.backend) == Backend::kFloat) {
    for (auto& b : basis) b = b.to_backend(Backend::kFloat);
  }
  const GramForm form = gram_from_cone_basis(h, basis);
  const Signature s = classify(form);
  Json j{{"gram", to_json(form.gram())},
         {"det", to_json(determinant(form.gram().matrix()))},
         {"signature", s.to_string()}};
  if (form.full_rank()) j["metric"] = to_json(form.metric());
  emit(j.dump(2) + "\n", g.out);
  return 0;
}

int cmd_extend(const GlobalFlags& g, const std::string& cone_arg, const std::string& x_arg,
               const std::string& base_arg, const std::string& frame_arg, const std::string& solver_arg) {
  const Cone cone = cone_from_json(load_json_arg(cone_arg, "--cone"));
  Vector x = vector_from_json(load_json_arg(x_arg, "--x"));
  if (!g.backend.empty()) x = x.to_backend(parse_backend(g.backend));
  std::optional<LorentzFrame> frame;
  if (!frame_arg.empty()) {
    frame = frame_from_json(load_json_arg(frame_arg, "--frame"));
  } else if (auto* f = cone.as<FutureCone>()) {
    frame = LorentzFrame(f->form, f->t);
  }
  SolverConfig solver = solver_arg.empty() ? SolverConfig{} : solver_from_json(load_json_arg(solver_arg, "--solver"));
  if (g.tol) solver.tol = *g.tol;
  const ExtensionResult r = extended_norm(ExtensionProblem{cone, base_norm_from_json(Json(base_arg), frame), x, solver});
  Json j{{"value", r.value},         {"lower_bound", r.lower_bound}, {"iterations", r.iterations},
         {"converged", r.converged}, {"solver", r.solver},           {"u", to_json(r.u)},
         {"v", to_json(r.v)}};
  emit(j.dump(2) + "\n", g.out);
  return 0;
}

int cmd_report(const GlobalFlags& g, const std::string& path, bool csv) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot read " + path);
  Json report;
  try {
    report = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::kParseError, path + ": " + e.what());
  }
  if (!report.is_object() || report.value("schema", "") != kReportSchema) {
    throw Error(Errc::kParseError, path + " is not a conekit report");
  }
  emit(csv ? report_csv(report) : report_summary(report), g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conekit: linear cones, hyperbolic norms and Lorentz geometry"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(CONEKIT_VERSION));

  GlobalFlags g;
  app.add_option("--backend", g.backend, "Arithmetic backend")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Absolute tolerance for float comparisons");
  app.add_option("--out", g.out, "Output path (default: standard output)");
  app.add_option("--seed", g.seed, "Seed override (u64)");

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_path;
  run->add_option("scenario", scenario_path, "Scenario JSON")->required();

  auto* prop = app.add_subcommand("proptest", "Run property suites");
  std::string suite;
  std::size_t trials = 0;
  std::optional<std::uint64_t> prop_seed;
  prop->add_option("--suite", suite, "Suite name (default: all)");
  prop->add_option("--trials", trials, "Trials (0: suite default)");
  prop->add_option("--seed", prop_seed, "Seed");
  auto* list = prop->add_flag("--list", "List suites and exit");

  auto* gram = app.add_subcommand("gram", "Polarization Gram matrix on a basis inside the cone");
  std::string norm_arg, basis_arg;
  gram->add_option("--cone", norm_arg, "Norm JSON or file, e.g. {\"family\":\"p_hyperbolic\",\"p\":2,\"spatial_dim\":1}")
      ->required();
  gram->add_option("--basis", basis_arg, "Basis vectors (JSON array or file)")->required();

  auto* ext = app.add_subcommand("extend", "Extended norm of a vector");
  std::string cone_arg, x_arg, base_arg = "wick", frame_arg, solver_arg;
  ext->add_option("--cone", cone_arg, "Cone JSON or file")->required();
  ext->add_option("--x", x_arg, "Vector (JSON array)")->required();
  ext->add_option("--base", base_arg, "Base norm: wick, l1, l2, linf")->capture_default_str();
  ext->add_option("--frame", frame_arg, "Frame JSON for the Wick base norm");
  ext->add_option("--solver", solver_arg, "Solver config (JSON)");

  auto* rep = app.add_subcommand("report", "Render a saved report");
  std::string report_path;
  bool csv = false;
  rep->add_option("report", report_path, "Report JSON")->required();
  rep->add_flag("--csv", csv, "Emit CSV instead of a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*run) return cmd_run(g, scenario_path);
    if (*prop) {
      if (*list) {
        for (const auto& s : suite_registry()) {
          std::cout << s.name << " (" << s.default_trials << "): " << s.description << '\n';
        }
        return 0;
      }
      return cmd_proptest(g, suite, trials, prop_seed);
    }
    if (*gram) return cmd_gram(g, norm_arg, basis_arg);
    if (*ext) return cmd_extend(g, cone_arg, x_arg, base_arg, frame_arg, solver_arg);
    if (*rep) return cmd_report(g, report_path, csv);
  } catch (const Error& e) {
    std::cerr << "conekit: " << e.what() << '\n';
    return e.code() == Errc::kParseError ? kExitParse : 1;
  } catch (const std::exception& e) {
    std::cerr << "conekit: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
