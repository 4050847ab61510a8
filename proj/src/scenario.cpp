#include "conekit/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "conekit/sampling.hpp"
#include "conekit/span.hpp"
#include "conekit/suites.hpp"

#ifndef CONEKIT_VERSION
#define CONEKIT_VERSION "0.0.0"
#endif

namespace conekit {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::kParseError, what); }

// Scenario-level objects shared by the tasks.
struct World {
  std::string name;
  std::optional<Cone> cone;
  std::optional<HyperbolicNorm> norm;
  std::optional<LorentzFrame> frame;
  Backend backend = Backend::kExact;
  ToleranceContext tol;
};

struct Task {
  std::string kind;
  std::string name;
  Json params;
  std::optional<std::uint64_t> seed;
};

enum class Status { kPass, kFail, kError };

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kError:
      return "error";
  }
  return "error";
}

class Ctx {
 public:
  Ctx(const World& w, const Json& params, std::uint64_t seed) : world(w), params(params), seed(seed) {}

  const World& world;
  const Json& params;
  std::uint64_t seed;
  Status status = Status::kPass;
  Json metrics = Json::object();
  Json witnesses = Json::object();
  std::string primary;
  double tolerance = 0;

  const Cone& cone() const {
    if (world.cone) return *world.cone;
    if (world.norm) return world.norm->cone();
    throw Error(Errc::kInvalidArgument, "scenario defines no cone");
  }
  const HyperbolicNorm& norm() const {
    if (!world.norm) throw Error(Errc::kInvalidArgument, "scenario defines no norm");
    return *world.norm;
  }
  const LorentzFrame& frame() const {
    if (!world.frame) throw Error(Errc::kInvalidArgument, "scenario defines no frame");
    return *world.frame;
  }
  // Form for signature and duality tasks: the frame's, else the future cone's.
  GramForm form() const {
    if (world.frame) return world.frame->form();
    if (auto* f = cone().as<FutureCone>()) return f->form;
    if (auto* p = cone().as<PCone>(); p && p->p == 2) return GramForm::minkowski(p->spatial_dim);
    throw Error(Errc::kInvalidArgument, "scenario defines no frame or future cone");
  }

  Vector vec(const char* key) const { return vector_from_json(require_field(params, key)).to_backend(world.backend); }
  bool has(const char* key) const { return params.is_object() && params.contains(key); }

  void fail_unless(bool ok) {
    if (!ok) status = Status::kFail;
  }
  // Compare against "expect" when present.
  template <class T>
  void expect_equal(const T& actual) {
    if (!has("expect")) return;
    fail_unless(params.at("expect") == Json(actual));
  }
  void expect_near(double actual) {
    if (!has("expect")) return;
    tolerance = number_field(params, "expect_tol", world.tol.abs_tol);
    const double e = scalar_from_json(params.at("expect")).to_double();
    fail_unless(std::fabs(actual - e) <= tolerance);
  }
  void set_primary(const std::string& key) { primary = key; }
};

std::size_t trials_param(const Ctx& c, std::size_t fallback) { return size_field(c.params, "trials", fallback); }

// ------------------------------------------------------------------ tasks

void task_contains(Ctx& c) {
  const Vector x = c.vec("x");
  const bool m = contains(c.cone(), x);
  c.metrics["member"] = m;
  c.set_primary("member");
  c.expect_equal(m);
}

void task_proper(Ctx& c) {
  const ProperResult r = is_proper(c.cone());
  c.metrics["proper"] = r.proper;
  c.set_primary("proper");
  if (r.witness) c.witnesses["v"] = to_json(*r.witness);
  c.fail_unless(r.proper == (c.has("expect") ? c.params.at("expect").get<bool>() : true));
}

void task_in_core(Ctx& c) {
  const CoreResult r = in_core(c.cone(), c.vec("x"));
  c.metrics["in_core"] = r.in_core;
  c.metrics["method"] = r.method;
  if (r.epsilon) c.metrics["epsilon"] = to_json(Scalar(*r.epsilon));
  c.set_primary("in_core");
  c.expect_equal(r.in_core);
}

void task_norm_eval(Ctx& c) {
  const Vector x = c.vec("x");
  c.metrics["value"] = norm_eval(c.norm(), x);
  if (c.norm().exact_squares()) c.metrics["value_sq"] = to_json(norm_sq_eval(c.norm(), x));
  c.set_primary("value");
  c.expect_near(norm_eval(c.norm(), x));
}

bool residual_ok(const Scalar& r, const ToleranceContext& tol) {
  return r.is_exact() ? r.is_zero() : std::fabs(r.to_double()) <= tol.abs_tol;
}

void task_polarizability(Ctx& c) {
  const HyperbolicNorm& h = c.norm();
  c.set_primary("residual");
  c.tolerance = c.world.tol.abs_tol;
  auto record = [&](const Vector& v, const Vector& w, const Scalar& r) {
    c.metrics["residual"] = to_json(r);
    c.witnesses["v"] = to_json(v);
    c.witnesses["w"] = to_json(w);
    c.witnesses["residual"] = to_json(r);
  };
  if (c.has("v")) {
    const Vector v = c.vec("v"), w = c.vec("w");
    const Scalar r = polarizability_residual(h, v, w);
    c.metrics["residual"] = to_json(r);
    if (!residual_ok(r, c.world.tol)) {
      record(v, w, r);
      c.status = Status::kFail;
    }
    return;
  }
  Rng rng(c.seed);
  const std::size_t n = trials_param(c, 1000);
  c.metrics["trials"] = n;
  c.metrics["residual"] = "0";
  for (std::size_t k = 0; k < n; ++k) {
    Vector v = random_cone_point(h.cone(), rng), w = random_cone_point(h.cone(), rng);
    if (c.world.backend == Backend::kFloat) {
      v = v.to_backend(Backend::kFloat);
      w = w.to_backend(Backend::kFloat);
    }
    const Scalar r = polarizability_residual(h, v, w);
    if (!residual_ok(r, c.world.tol)) {
      record(v, w, r);
      c.metrics["failed_at"] = k;
      c.status = Status::kFail;
      return;
    }
  }
}

void task_reverse_triangle(Ctx& c) {
  const HyperbolicNorm& h = c.norm();
  c.set_primary("residual");
  auto check = [&](const Vector& u, const Vector& v) {
    const double r = reverse_triangle_residual(h, u, v);
    const auto s = reverse_triangle_sign(h, u, v);
    const bool ok = s ? *s >= 0 : r >= -c.world.tol.abs_tol;
    return std::make_pair(ok, r);
  };
  if (c.has("u")) {
    const Vector u = c.vec("u"), v = c.vec("v");
    const auto [ok, r] = check(u, v);
    c.metrics["residual"] = r;
    if (auto s = reverse_triangle_sign(h, u, v)) c.metrics["exact_sign"] = *s;
    c.fail_unless(ok);
    return;
  }
  Rng rng(c.seed);
  const std::size_t n = trials_param(c, 1000);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Vector u = random_cone_point(h.cone(), rng), v = random_cone_point(h.cone(), rng);
    const auto [ok, r] = check(u, v);
    worst = std::min(worst, r);
    if (!ok) {
      c.witnesses["u"] = to_json(u);
      c.witnesses["v"] = to_json(v);
      c.status = Status::kFail;
      break;
    }
  }
  c.metrics["trials"] = n;
  c.metrics["residual"] = worst;
}

void task_polar_inner(Ctx& c) {
  const Scalar ip = polar_inner(c.norm(), c.vec("v"), c.vec("w"));
  c.metrics["value"] = to_json(ip);
  c.set_primary("value");
  c.expect_near(ip.to_double());
}

void task_reverse_cs(Ctx& c) {
  const ReverseCsResult r = reverse_cs_residual(c.norm(), c.vec("v"), c.vec("w"));
  c.metrics["residual"] = r.residual;
  if (r.gap_sign) c.metrics["gap_sign"] = *r.gap_sign;
  if (r.inner_sign) c.metrics["inner_sign"] = *r.inner_sign;
  c.set_primary("residual");
  c.fail_unless(r.holds ? *r.holds : r.residual >= -c.world.tol.abs_tol);
}

void task_equality(Ctx& c) {
  const EqualityResult r = equality_is_collinear(c.norm(), c.vec("v"), c.vec("w"), c.world.tol);
  c.metrics["equality"] = r.equality;
  c.metrics["collinear"] = r.collinear;
  c.set_primary("equality");
  c.fail_unless(r.equality == r.collinear);
}

void report_signature(Ctx& c, const Signature& s) {
  c.metrics["signature"] = s.to_string();
  c.metrics["p_plus"] = s.p_plus;
  c.metrics["n_minus"] = s.n_minus;
  c.metrics["z_zero"] = s.z_zero;
  c.set_primary("signature");
  c.expect_equal(s.to_string());
}

void task_gram(Ctx& c) {
  const GramForm g = gram_from_cone_basis(c.norm(), vectors_from_json(require_field(c.params, "basis")));
  c.metrics["gram"] = to_json(g.gram());
  c.metrics["det"] = to_json(determinant(g.gram().matrix()));
  if (g.full_rank()) c.metrics["metric"] = to_json(g.metric());
  if (c.has("expect_gram")) c.fail_unless(sym_matrix_from_json(c.params.at("expect_gram")) == g.gram());
  report_signature(c, classify(g));
}

void task_signature(Ctx& c) {
  if (c.has("gram")) {
    report_signature(c, classify(sym_matrix_from_json(c.params.at("gram"))));
  } else if (c.has("basis")) {
    report_signature(c, classify(gram_from_cone_basis(c.norm(), vectors_from_json(c.params.at("basis")))));
  } else {
    report_signature(c, classify(c.form()));
  }
}

void task_self_duality(Ctx& c) {
  const std::size_t n = size_field(c.params, "samples", 1000);
  const Scalar radius = c.has("radius") ? scalar_from_json(c.params.at("radius")) : Scalar(10);
  // The p = 2 cone is the Minkowski future cone.
  const Cone* cone = &c.cone();
  std::optional<Cone> future;
  if (auto* p = cone->as<PCone>(); p && p->p == 2) cone = &future.emplace(Cone::minkowski_future(p->spatial_dim));
  const SelfDualityReport r = self_duality_report(*cone, c.form(), n, c.seed, radius);
  c.metrics["holds"] = r.holds;
  c.metrics["forward_holds"] = r.forward_holds;
  c.metrics["backward_holds"] = r.backward_holds;
  c.metrics["samples"] = r.samples;
  if (!r.detail.empty()) c.metrics["detail"] = r.detail;
  if (r.witness) c.witnesses["v"] = to_json(*r.witness);
  c.set_primary("holds");
  c.fail_unless(r.holds == (c.has("expect") ? c.params.at("expect").get<bool>() : true));
}

void task_decompose(Ctx& c) {
  const Decomposition d = decompose(c.frame(), c.vec("v"));
  c.metrics["alpha"] = to_json(d.alpha);
  c.metrics["w"] = to_json(d.w);
  c.metrics["wick_norm"] = wick_norm(c.frame(), c.vec("v"));
  c.set_primary("alpha");
}

void task_causal_class(Ctx& c) {
  const std::string cls = causal_class_name(causal_class(c.frame(), c.vec("v")));
  c.metrics["class"] = cls;
  c.set_primary("class");
  c.expect_equal(cls);
}

void task_future_defect(Ctx& c) {
  const FutureDefect d = future_defect(c.frame(), c.vec("x"));
  c.metrics["defect"] = d.defect;
  c.metrics["exact_sign"] = d.exact_sign;
  c.set_primary("defect");
  c.fail_unless(d.exact_sign >= 0);
}

void task_future_decompose(Ctx& c) {
  const FutureSplit s = future_decompose(c.vec("x"), c.frame());
  c.metrics["lambda"] = to_json(Scalar(s.lambda));
  c.metrics["lambda_star"] = s.lambda_star;
  c.metrics["lambda_exact"] = s.lambda_exact;
  c.witnesses["v1"] = to_json(s.v1);
  c.witnesses["v2"] = to_json(s.v2);
  c.set_primary("lambda_star");
  c.expect_near(s.lambda_star);
}

ExtensionProblem extension_problem(const Ctx& c, const Vector& x) {
  const Json base = c.has("base") ? c.params.at("base") : Json("wick");
  return ExtensionProblem{c.cone(), base_norm_from_json(base, c.world.frame), x,
                          solver_from_json(c.has("solver") ? c.params.at("solver") : Json())};
}

void task_extend(Ctx& c) {
  const ExtensionResult r = extended_norm(extension_problem(c, c.vec("x")));
  c.metrics["value"] = r.value;
  c.metrics["lower_bound"] = r.lower_bound;
  c.metrics["iterations"] = r.iterations;
  c.metrics["converged"] = r.converged;
  c.metrics["solver"] = r.solver;
  c.witnesses["u"] = to_json(r.u);
  c.witnesses["v"] = to_json(r.v);
  c.set_primary("value");
  c.expect_near(r.value);
}

void task_grid_oracle(Ctx& c) {
  const double v = grid_oracle(extension_problem(c, c.vec("x")));
  c.metrics["value"] = v;
  c.set_primary("value");
  c.expect_near(v);
}

void task_equivalence_constant(Ctx& c) {
  const Json base = c.has("base") ? c.params.at("base") : Json("wick");
  const double k = equivalence_constant(c.cone(), base_norm_from_json(base, c.world.frame), c.vec("s"),
                                        scalar_from_json(require_field(c.params, "delta")),
                                        size_field(c.params, "samples", 1000), c.seed);
  c.metrics["K"] = k;
  c.set_primary("K");
  c.expect_near(k);
}

OrderedSequence sequence_param(const Ctx& c) {
  return OrderedSequence{c.cone(), c.frame(), generate(sequence_rule_from_json(require_field(c.params, "sequence")))};
}

void report_check(Ctx& c, const OrderCheck& r) {
  c.metrics["ok"] = r.ok;
  if (r.fail_index) c.metrics["fail_index"] = *r.fail_index;
  c.set_primary("ok");
  if (c.has("expect_fail_index")) {
    c.fail_unless(r.fail_index && *r.fail_index == c.params.at("expect_fail_index").get<std::size_t>());
  } else {
    c.fail_unless(r.ok == (c.has("expect") ? c.params.at("expect").get<bool>() : true));
  }
}

void task_nondecreasing(Ctx& c) { report_check(c, is_nondecreasing(sequence_param(c))); }

void task_bounded_above(Ctx& c) { report_check(c, is_bounded_above(sequence_param(c), c.vec("y"))); }

void task_completeness(Ctx& c) {
  const OrderedSequence s = sequence_param(c);
  const bool backward = c.has("backward") && c.params.at("backward").get<bool>();
  const CompletenessCertificate r =
      backward ? backward_completeness_certificate(s, c.vec("y")) : completeness_certificate(s, c.vec("y"));
  c.metrics["alpha_monotone"] = r.alpha_monotone;
  c.metrics["cauchy_bound_ok"] = r.cauchy_bound_ok;
  c.metrics["converged"] = r.converged;
  c.metrics["max_residual"] = r.max_residual;
  c.metrics["limit"] = to_json(r.limit);
  c.tolerance = kLimitThreshold;
  c.set_primary("max_residual");
  c.fail_unless(r.alpha_monotone && r.cauchy_bound_ok && r.converged && r.max_residual < kLimitThreshold);
}

void task_monotone_wick(Ctx& c) {
  const bool ok = monotone_wick_check(c.frame(), c.cone(), c.vec("x"), c.vec("y"));
  c.metrics["monotone"] = ok;
  c.set_primary("monotone");
  c.fail_unless(ok);
}

FormalDifference difference_param(const Ctx& c, const char* key) {
  const Json& j = require_field(c.params, key);
  return FormalDifference(vector_from_json(require_field(j, "pos")), vector_from_json(require_field(j, "neg")),
                          c.cone());
}

void task_equiv(Ctx& c) {
  const bool e = equiv(difference_param(c, "a"), difference_param(c, "b"), c.world.tol);
  c.metrics["equivalent"] = e;
  c.set_primary("equivalent");
  c.expect_equal(e);
}

void task_suite(Ctx& c) {
  const std::string name = require_field(c.params, "suite").get<std::string>();
  const SuiteResult r = run_suite(name, trials_param(c, 0), c.seed);
  c.metrics["suite"] = r.name;
  c.metrics["trials"] = r.trials;
  c.metrics["checks"] = r.checks;
  c.metrics["failures"] = r.failures;
  for (const auto& [k, v] : r.metrics) c.metrics[k] = v;
  if (r.witness) c.witnesses["first_failure"] = *r.witness;
  c.set_primary("failures");
  c.fail_unless(r.passed());
}

using Handler = void (*)(Ctx&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"contains", task_contains},
      {"proper", task_proper},
      {"in_core", task_in_core},
      {"norm_eval", task_norm_eval},
      {"polarizability", task_polarizability},
      {"reverse_triangle", task_reverse_triangle},
      {"polar_inner", task_polar_inner},
      {"reverse_cs", task_reverse_cs},
      {"equality", task_equality},
      {"gram", task_gram},
      {"signature", task_signature},
      {"self_duality", task_self_duality},
      {"decompose", task_decompose},
      {"causal_class", task_causal_class},
      {"future_defect", task_future_defect},
      {"future_decompose", task_future_decompose},
      {"extend", task_extend},
      {"grid_oracle", task_grid_oracle},
      {"equivalence_constant", task_equivalence_constant},
      {"nondecreasing", task_nondecreasing},
      {"bounded_above", task_bounded_above},
      {"completeness", task_completeness},
      {"monotone_wick", task_monotone_wick},
      {"equiv", task_equiv},
      {"suite", task_suite},
  };
  return h;
}

std::optional<std::uint64_t> seed_value(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const Json& v = j.at(key);
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<std::uint64_t>();
  if (v.is_string()) return parse_seed(v.get<std::string>());
  parse_fail(std::string("\"") + key + "\" must be a nonnegative integer");
}

World parse_world(const Json& s, const RunOptions& opt) {
  World w;
  w.name = require_field(s, "name").get<std::string>();
  w.backend = opt.backend ? *opt.backend
                          : (s.contains("backend") ? parse_backend(s.at("backend").get<std::string>()) : Backend::kExact);
  w.tol.abs_tol = opt.tol ? *opt.tol : number_field(s, "tol", w.tol.abs_tol);
  if (s.contains("cone")) w.cone = cone_from_json(s.at("cone"));
  if (s.contains("norm")) w.norm = norm_from_json(s.at("norm"));
  if (s.contains("frame")) w.frame = frame_from_json(s.at("frame"));
  return w;
}

std::vector<Task> parse_tasks(const Json& s) {
  const Json& arr = require_field(s, "tasks");
  if (!arr.is_array()) parse_fail("\"tasks\" must be an array");
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& t = arr[i];
    if (!t.is_object()) parse_fail("task " + std::to_string(i) + " must be an object");
    Task task;
    task.kind = require_field(t, "kind").get<std::string>();
    if (!handlers().count(task.kind)) parse_fail("unknown task kind \"" + task.kind + "\"");
    task.name = t.contains("name") ? t.at("name").get<std::string>() : task.kind + "_" + std::to_string(i);
    task.params = t.contains("params") ? t.at("params") : Json::object();
    if (!task.params.is_object()) parse_fail("params of task " + task.name + " must be an object");
    task.seed = seed_value(t, "seed");
    tasks.push_back(std::move(task));
  }
  return tasks;
}

}  // namespace

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    parse_fail("seed \"" + text + "\" is not an unsigned 64-bit integer");
  }
  if (used != text.size()) parse_fail("seed \"" + text + "\" is not an unsigned 64-bit integer");
  return v;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* s = std::getenv("CONEKIT_SEED");
  if (!s || !*s) return std::nullopt;
  return parse_seed(s);
}

RunOutcome run_scenario(const Json& scenario, const RunOptions& opt) {
  World world;
  std::vector<Task> tasks;
  std::optional<std::uint64_t> scenario_seed;
  try {
    if (!scenario.is_object()) parse_fail("scenario must be a JSON object");
    const Json& schema = require_field(scenario, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kScenarioSchema) {
      parse_fail(std::string("schema must be \"") + kScenarioSchema + "\"");
    }
    scenario_seed = seed_value(scenario, "seed");
    world = parse_world(scenario, opt);
    tasks = parse_tasks(scenario);
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError) throw;
    parse_fail(e.what());
  }

  const std::optional<std::uint64_t> override_seed = opt.cli_seed ? opt.cli_seed : opt.env_seed;
  Json report;
  report["schema"] = kReportSchema;
  report["scenario"] = world.name;
  report["version"] = CONEKIT_VERSION;
  report["backend"] = std::string(backend_name(world.backend));
  report["seed"] = override_seed ? *override_seed : scenario_seed.value_or(0);
  report["tasks"] = Json::array();
  std::size_t passed = 0, failed = 0, errors = 0;

  for (const Task& t : tasks) {
    const std::uint64_t seed = override_seed ? *override_seed : t.seed ? *t.seed : scenario_seed.value_or(0);
    Ctx ctx(world, t.params, seed);
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      handlers().at(t.kind)(ctx);
    } catch (const Error& e) {
      ctx.status = Status::kError;
      error = e.what();
    } catch (const std::exception& e) {
      ctx.status = Status::kError;
      error = std::string("ParseError: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json entry;
    entry["name"] = t.name;
    entry["kind"] = t.kind;
    entry["seed"] = seed;
    entry["status"] = status_name(ctx.status);
    entry["metrics"] = ctx.metrics;
    entry["witnesses"] = ctx.witnesses;
    entry["primary_metric"] = ctx.primary;
    entry["tolerance"] = ctx.tolerance;
    if (!error.empty()) entry["error"] = error;
    entry["wall_time_ms"] = ms;
    report["tasks"].push_back(std::move(entry));
    (ctx.status == Status::kPass ? passed : ctx.status == Status::kFail ? failed : errors) += 1;
  }
  report["summary"] = {{"passed", passed}, {"failed", failed}, {"errors", errors}};
  return {std::move(report), failed + errors == 0 ? 0 : 1};
}

RunOutcome run_scenario_file(const std::string& path, const RunOptions& opt) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return run_scenario(j, opt);
}

Json strip_timing(Json report) {
  if (report.is_object()) {
    report.erase("wall_time_ms");
    for (auto& [k, v] : report.items()) v = strip_timing(v);
  } else if (report.is_array()) {
    for (auto& v : report) v = strip_timing(v);
  }
  return report;
}

namespace {

std::string csv_field(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string report_csv(const Json& report) {
  std::ostringstream out;
  out << "name,kind,status,metric,value,tolerance,wall_time_ms\n";
  for (const auto& t : report.at("tasks")) {
    const std::string metric = t.value("primary_metric", "");
    const Json& metrics = t.at("metrics");
    const Json value = !metric.empty() && metrics.contains(metric) ? metrics.at(metric) : Json("");
    out << csv_field(t.at("name")) << ',' << csv_field(t.at("kind")) << ',' << csv_field(t.at("status")) << ','
        << csv_field(Json(metric)) << ',' << csv_field(value) << ',' << csv_field(t.value("tolerance", Json(0)))
        << ',' << csv_field(t.value("wall_time_ms", Json(0))) << '\n';
  }
  return out.str();
}

std::string report_summary(const Json& report) {
  std::ostringstream out;
  for (const auto& t : report.at("tasks")) {
    std::string status = t.at("status").get<std::string>();
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << status << ' ' << t.at("name").get<std::string>();
    if (t.contains("error")) out << ": " << t.at("error").get<std::string>();
    out << '\n';
  }
  const Json& s = report.at("summary");
  out << report.at("scenario").get<std::string>() << ": " << s.at("passed") << " passed, " << s.at("failed")
      << " failed, " << s.at("errors") << " errors\n";
  return out.str();
}

}  // namespace conekit
