#include "conekit/serialization.hpp"

#include <cmath>

namespace conekit {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::kParseError, what); }

}  // namespace

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key, std::size_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    parse_fail(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double number_field(const Json& j, const char* key, double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return scalar_from_json(v).to_double();
  }
  parse_fail(std::string("field \"") + key + "\" must be a number");
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get_ref<const std::string&>());
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_float()) return Scalar::real(j.get<double>());
  parse_fail("expected a scalar, got " + j.dump());
}

Json to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("expected a non-empty array, got " + j.dump());
  std::vector<Scalar> c;
  bool any_float = false;
  for (const auto& e : j) {
    c.push_back(scalar_from_json(e));
    any_float = any_float || !c.back().is_exact();
  }
  if (any_float) {
    for (auto& s : c) s = s.to_backend(Backend::kFloat);
  }
  return Vector(std::move(c));
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v.coords()) a.push_back(to_json(s));
  return a;
}

std::vector<Vector> vectors_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e));
  for (const auto& v : out) {
    if (v.dim() != out.front().dim()) parse_fail("vectors of different dimensions");
  }
  return out;
}

Json to_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

SymMatrix sym_matrix_from_json(const Json& j) {
  const auto rows = vectors_from_json(j);
  if (rows.empty() || rows.size() != rows.front().dim()) parse_fail("gram must be a square array");
  bool any_float = false;
  for (const auto& r : rows) any_float = any_float || !r.is_exact();
  std::vector<Vector> fixed;
  for (const auto& r : rows) fixed.push_back(any_float ? r.to_backend(Backend::kFloat) : r);
  try {
    return SymMatrix(Matrix::from_rows(fixed));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json to_json(const SymMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) a.push_back(to_json(m.matrix().row(i)));
  return a;
}

GramForm gram_form_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("form must be an object");
  if (j.contains("minkowski")) return GramForm::minkowski(size_field(j, "minkowski", 0));
  SymMatrix g = sym_matrix_from_json(require_field(j, "gram"));
  if (!j.contains("basis")) return GramForm::standard(std::move(g));
  return GramForm(vectors_from_json(j.at("basis")), std::move(g));
}

Json to_json(const GramForm& g) { return Json{{"basis", to_json(g.basis())}, {"gram", to_json(g.gram())}}; }

Cone cone_from_json(const Json& j) {
  const std::string type = require_field(j, "type").get<std::string>();
  if (type == "polyhedral") return Cone::polyhedral(vectors_from_json(require_field(j, "generators")));
  if (type == "pcone") {
    return Cone::p_cone(number_field(j, "p", 2), size_field(j, "spatial_dim", 1));
  }
  if (type == "future") {
    return Cone::future(gram_form_from_json(require_field(j, "form")), vector_from_json(require_field(j, "t")));
  }
  if (type == "minkowski_future") return Cone::minkowski_future(size_field(j, "spatial_dim", 1));
  if (type == "orthant") return Cone::orthant(size_field(j, "dim", 1));
  parse_fail("unknown cone type \"" + type + "\"");
}

Json to_json(const Cone& c) {
  if (auto* p = c.as<PolyhedralCone>()) return Json{{"type", "polyhedral"}, {"generators", to_json(p->generators)}};
  if (auto* p = c.as<PCone>()) {
    Json pj = std::isinf(p->p) ? Json("inf") : Json(p->p);
    return Json{{"type", "pcone"}, {"p", pj}, {"spatial_dim", p->spatial_dim}};
  }
  if (auto* f = c.as<FutureCone>()) return Json{{"type", "future"}, {"form", to_json(f->form)}, {"t", to_json(f->t)}};
  return Json{{"type", "orthant"}, {"dim", c.as<Orthant>()->dim}};
}

HyperbolicNorm norm_from_json(const Json& j) {
  const std::string family = require_field(j, "family").get<std::string>();
  if (family == "p_hyperbolic") {
    return HyperbolicNorm::p_hyperbolic(number_field(j, "p", 2), size_field(j, "spatial_dim", 1));
  }
  if (family == "discrete_lq") {
    const Vector w = vector_from_json(require_field(j, "weights"));
    return HyperbolicNorm::discrete_lq(number_field(j, "q", 0.5), w.coords());
  }
  if (family == "form_induced") {
    return HyperbolicNorm::form_induced(gram_form_from_json(require_field(j, "form")),
                                        vector_from_json(require_field(j, "t")));
  }
  parse_fail("unknown norm family \"" + family + "\"");
}

LorentzFrame frame_from_json(const Json& j) {
  if (j.is_object() && j.contains("minkowski") && !j.contains("t")) {
    return LorentzFrame::minkowski(size_field(j, "minkowski", 0));
  }
  return LorentzFrame(gram_form_from_json(require_field(j, "form")), vector_from_json(require_field(j, "t")));
}

BaseNorm base_norm_from_json(const Json& j, const std::optional<LorentzFrame>& frame) {
  if (!j.is_string()) parse_fail("base norm must be a string");
  const auto& s = j.get_ref<const std::string&>();
  if (s == "l1") return BaseNorm::l1();
  if (s == "l2") return BaseNorm::l2();
  if (s == "linf") return BaseNorm::linf();
  if (s == "wick") {
    if (!frame) parse_fail("wick base norm needs a frame");
    return BaseNorm::wick(*frame);
  }
  parse_fail("unknown base norm \"" + s + "\"");
}

SolverConfig solver_from_json(const Json& j) {
  SolverConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) parse_fail("solver must be an object");
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "ellipsoid") {
      c.kind = SolverKind::kEllipsoid;
    } else if (k == "projected_subgradient") {
      c.kind = SolverKind::kProjectedSubgradient;
    } else if (k == "grid_oracle") {
      c.kind = SolverKind::kGridOracle;
    } else {
      parse_fail("unknown solver \"" + k + "\"");
    }
  }
  c.resolution = size_field(j, "resolution", c.resolution);
  c.refine_rounds = size_field(j, "refine_rounds", c.refine_rounds);
  c.max_iters = size_field(j, "max_iters", c.max_iters);
  c.step_scale = number_field(j, "step_scale", c.step_scale);
  c.tol = number_field(j, "tol", c.tol);
  return c;
}

SequenceRule sequence_rule_from_json(const Json& j) {
  const std::string rule = require_field(j, "rule").get<std::string>();
  if (rule == "explicit") return ExplicitRule{vectors_from_json(require_field(j, "terms"))};
  if (rule == "affine") {
    return AffineRule{vector_from_json(require_field(j, "start")), vector_from_json(require_field(j, "step")),
                      size_field(j, "N", 64)};
  }
  if (rule == "geometric") {
    GeometricRule g;
    g.target = vector_from_json(require_field(j, "target"));
    const Scalar r = scalar_from_json(require_field(j, "ratio"));
    if (!r.is_exact()) parse_fail("ratio must be rational");
    g.ratio = r.rational();
    if (j.contains("start")) g.start = vector_from_json(j.at("start"));
    g.n = size_field(j, "N", 64);
    return g;
  }
  parse_fail("unknown sequence rule \"" + rule + "\"");
}

}  // namespace conekit
