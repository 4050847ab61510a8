#include "conekit/hypnorm.hpp"

#include <cmath>

namespace conekit {

HyperbolicNorm HyperbolicNorm::p_hyperbolic(double p, std::size_t spatial_dim) {
  if (!(p >= 1) || std::isinf(p)) throw Error(Errc::kInvalidArgument, "p-hyperbolic norm needs 1 <= p < inf");
  return HyperbolicNorm(PHyperbolic{p, spatial_dim}, Cone::p_cone(p, spatial_dim));
}

HyperbolicNorm HyperbolicNorm::discrete_lq(double q, std::vector<Scalar> weights) {
  if (!(q > 0 && q < 1)) throw Error(Errc::kInvalidArgument, "discrete L^q norm needs 0 < q < 1");
  if (weights.empty()) throw Error(Errc::kInvalidArgument, "discrete L^q norm needs weights");
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw Error(Errc::kInvalidArgument, "L^q weights must be positive");
  }
  const std::size_t dim = weights.size();
  return HyperbolicNorm(DiscreteLq{q, std::move(weights)}, Cone::orthant(dim));
}

HyperbolicNorm HyperbolicNorm::form_induced(GramForm form, Vector t) {
  Cone cone = Cone::future(form, t);
  return HyperbolicNorm(FormInduced{std::move(form), std::move(t)}, std::move(cone));
}

std::string HyperbolicNorm::kind() const {
  static const char* names[] = {"p_hyperbolic", "discrete_lq", "form_induced"};
  return names[rep_.index()];
}

bool HyperbolicNorm::exact_squares() const {
  if (auto* p = as<PHyperbolic>()) return p->p == 2;
  return as<FormInduced>() != nullptr;
}

namespace {

void require_member(const HyperbolicNorm& h, const Vector& x) {
  if (!contains(h.cone(), x)) {
    throw Error(Errc::kOutsideCone, x.to_string() + " is outside the " + h.cone().kind() + " cone");
  }
}

// <x,x> for quadratic families, no membership check.
Scalar quad_unchecked(const HyperbolicNorm& h, const Vector& x) {
  if (auto* f = h.as<FormInduced>()) return f->form.quad(x);
  Scalar s = x[0] * x[0];
  for (std::size_t i = 1; i < x.dim(); ++i) s -= x[i] * x[i];
  return s;
}

// Exact norm for p = 1 (rational-valued).
std::optional<Scalar> exact_norm(const HyperbolicNorm& h, const Vector& x) {
  auto* p = h.as<PHyperbolic>();
  if (!p || p->p != 1) return std::nullopt;
  Scalar s = x[0];
  for (std::size_t i = 1; i < x.dim(); ++i) s -= x[i].abs();
  return s;
}

// Exact squared norm where available, no membership check.
std::optional<Scalar> exact_norm_sq(const HyperbolicNorm& h, const Vector& x) {
  if (h.exact_squares()) return quad_unchecked(h, x);
  if (auto n = exact_norm(h, x)) return *n * *n;
  return std::nullopt;
}

double eval_unchecked(const HyperbolicNorm& h, const Vector& x) {
  if (h.exact_squares()) return sqrt_to_double(quad_unchecked(h, x));
  if (auto n = exact_norm(h, x)) return std::max(0.0, n->to_double());
  if (auto* p = h.as<PHyperbolic>()) {
    double s = std::pow(std::fabs(x[0].to_double()), p->p);
    for (std::size_t i = 1; i < x.dim(); ++i) s -= std::pow(std::fabs(x[i].to_double()), p->p);
    return s > 0 ? std::pow(s, 1.0 / p->p) : 0.0;
  }
  const auto& lq = *h.as<DiscreteLq>();
  if (x.dim() != lq.weights.size()) throw Error(Errc::kDimensionMismatch, "L^q norm dimension");
  double s = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double f = x[i].to_double();
    if (f > 0) s += lq.weights[i].to_double() * std::pow(f, lq.q);
  }
  return s > 0 ? std::pow(s, 1.0 / lq.q) : 0.0;
}

}  // namespace

ExtendedReal norm_eval(const HyperbolicNorm& h, const Vector& x) {
  require_member(h, x);
  return eval_unchecked(h, x);
}

Scalar norm_sq_eval(const HyperbolicNorm& h, const Vector& x) {
  if (!h.exact_squares()) {
    throw Error(Errc::kUnsupportedFamily, "norm_sq_eval needs p = 2 or a form-induced norm");
  }
  require_member(h, x);
  return quad_unchecked(h, x);
}

double reverse_triangle_residual(const HyperbolicNorm& h, const Vector& u, const Vector& v) {
  require_member(h, u);
  require_member(h, v);
  return eval_unchecked(h, u + v) - eval_unchecked(h, u) - eval_unchecked(h, v);
}

std::optional<int> reverse_triangle_sign(const HyperbolicNorm& h, const Vector& u, const Vector& v) {
  require_member(h, u);
  require_member(h, v);
  if (!u.is_exact() || !v.is_exact()) return std::nullopt;
  if (auto nu = exact_norm(h, u)) {
    return (*exact_norm(h, u + v) - *nu - *exact_norm(h, v)).sign();
  }
  if (!h.exact_squares()) return std::nullopt;
  // sign(sqrt(A) - sqrt(B) - sqrt(C)) with D = A - B - C.
  const Scalar a = quad_unchecked(h, u + v);
  const Scalar b = quad_unchecked(h, u);
  const Scalar c = quad_unchecked(h, v);
  const Scalar d = a - b - c;
  if (d.sign() < 0) return -1;
  return (d * d - Scalar(4) * b * c).sign();
}

Scalar polarizability_residual(const HyperbolicNorm& h, const Vector& v, const Vector& w) {
  require_member(h, v);
  require_member(h, w);
  const Vector v2w = v + w * Scalar(2).to_backend(w.backend());
  const Vector vw = v + w;
  if (v.is_exact() && w.is_exact()) {
    auto a = exact_norm_sq(h, v2w);
    if (a) {
      return *a + *exact_norm_sq(h, v) - Scalar(2) * *exact_norm_sq(h, vw) -
             Scalar(2) * *exact_norm_sq(h, w);
    }
  }
  auto sq = [&](const Vector& x) {
    double n = eval_unchecked(h, x);
    return n * n;
  };
  return Scalar::real(sq(v2w) + sq(v) - 2 * sq(vw) - 2 * sq(w));
}

Scalar polar_inner(const HyperbolicNorm& h, const Vector& v, const Vector& w) {
  require_member(h, v);
  require_member(h, w);
  const bool exact_input = v.is_exact() && w.is_exact();
  if (h.exact_squares()) {
    Scalar s = quad_unchecked(h, v + w) - quad_unchecked(h, v) - quad_unchecked(h, w);
    return s * (exact_input ? Scalar::exact(1, 2) : Scalar::real(0.5));
  }
  if (exact_input) {
    throw Error(Errc::kUnsupportedFamily, "exact polar inner product needs p = 2 or a form-induced norm");
  }
  auto sq = [&](const Vector& x) {
    double n = eval_unchecked(h, x);
    return n * n;
  };
  return Scalar::real(0.5 * (sq(v + w) - sq(v) - sq(w)));
}

ReverseCsResult reverse_cs_residual(const HyperbolicNorm& h, const Vector& v, const Vector& w) {
  ReverseCsResult r;
  const Scalar ip = polar_inner(h, v, w);
  r.residual = ip.to_double() - eval_unchecked(h, v) * eval_unchecked(h, w);
  if (ip.is_exact()) {
    const Scalar gap = ip * ip - quad_unchecked(h, v) * quad_unchecked(h, w);
    r.gap_sign = gap.sign();
    r.inner_sign = ip.sign();
    r.holds = *r.inner_sign >= 0 && *r.gap_sign >= 0;
  }
  return r;
}

bool nonneg_collinear(const Vector& v, const Vector& w, const ToleranceContext& ctx) {
  require_same_dim(v, w, "collinear");
  if (v.is_zero() || w.is_zero()) return true;
  const bool exact = v.is_exact() && w.is_exact();
  // Pivot on the largest |w_i| (any nonzero entry is fine when exact).
  std::size_t k = 0;
  double best = -1;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    double m = std::fabs(w[i].to_double());
    if (exact ? (!w[i].is_zero() && best < 0) : m > best) {
      best = m;
      k = i;
    }
  }
  if (exact) {
    Scalar lambda = v[k] / w[k];
    return lambda.sign() > 0 && v == w * lambda;
  }
  const double lambda = v[k].to_double() / w[k].to_double();
  if (lambda <= 0) return false;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!approx_eq(v[i].to_double(), lambda * w[i].to_double(), ctx)) return false;
  }
  return true;
}

EqualityResult equality_is_collinear(const HyperbolicNorm& h, const Vector& v, const Vector& w,
                                     const ToleranceContext& ctx) {
  EqualityResult r;
  if (auto s = reverse_triangle_sign(h, v, w)) {
    r.equality = *s == 0;
  } else {
    double res = reverse_triangle_residual(h, v, w);
    double scale = eval_unchecked(h, v) + eval_unchecked(h, w);
    r.equality = std::fabs(res) <= ctx.abs_tol + ctx.rel_tol * scale;
  }
  r.collinear = nonneg_collinear(v, w, ctx);
  return r;
}

}  // namespace conekit
