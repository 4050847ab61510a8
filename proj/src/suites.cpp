#include "conekit/suites.hpp"

#include <cmath>

#include "conekit/extension.hpp"
#include "conekit/hypnorm.hpp"
#include "conekit/lorentz.hpp"
#include "conekit/order.hpp"
#include "conekit/sampling.hpp"
#include "conekit/span.hpp"

namespace conekit {

namespace {

class Recorder {
 public:
  Recorder(std::string name, std::size_t trials) {
    r_.name = std::move(name);
    r_.trials = trials;
  }

  template <class F>
  void check(bool ok, F&& witness) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (!r_.witness) r_.witness = witness();
  }

  void metric(const std::string& key, double v) { r_.metrics[key] = v; }
  void max_metric(const std::string& key, double v) {
    auto [it, fresh] = r_.metrics.emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  void count(const std::string& key) { r_.metrics[key] += 1; }

  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

Scalar nonneg(Rng& rng) { return Scalar(rng.nonneg_rational(10, 8)); }

std::string pair_str(const Vector& a, const Vector& b) { return a.to_string() + ", " + b.to_string(); }

LorentzFrame any_frame(std::size_t n, Rng& rng) {
  return rng.coin() ? LorentzFrame::minkowski(n) : random_lorentz_frame(n, rng);
}

Cone frame_cone(const LorentzFrame& f) { return Cone::future(f.form(), f.t()); }

Vector future_sample(const LorentzFrame& f, Rng& rng) {
  return sample_future_causal(f.form(), f.t(), Scalar(10), rng);
}

// A proper cone of a random kind.
Cone random_proper_cone(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0:
      return Cone::minkowski_future(pick(rng, 1, 3));
    case 1:
      return Cone::p_cone(rng.coin() ? 1.0 : std::numeric_limits<double>::infinity(), pick(rng, 1, 3));
    case 2:
      return Cone::orthant(pick(rng, 1, 4));
    case 3:
      return frame_cone(random_lorentz_frame(pick(rng, 1, 3), rng));
    default: {
      // Generators inside a future cone give a pointed polyhedral cone.
      const Cone f = Cone::minkowski_future(pick(rng, 1, 3));
      std::vector<Vector> gens;
      for (std::size_t i = 0, m = pick(rng, 1, 5); i < m; ++i) gens.push_back(random_cone_point(f, rng));
      return Cone::polyhedral(std::move(gens));
    }
  }
}

// Families with exact squared norms.
HyperbolicNorm random_quadratic_norm(Rng& rng, std::size_t max_spatial) {
  const std::size_t n = pick(rng, 1, max_spatial);
  if (rng.coin()) return HyperbolicNorm::p_hyperbolic(2, n);
  const LorentzFrame f = random_lorentz_frame(n, rng);
  return HyperbolicNorm::form_induced(f.form(), f.t());
}

// ---------------------------------------------------------------- numerics

SuiteResult numerics_field(std::size_t trials, std::uint64_t seed) {
  Recorder rec("numerics.field", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Scalar a(rng.rational(50, 20)), b(rng.rational(50, 20)), c(rng.rational(50, 20));
    auto w = [&] { return a.to_string() + ", " + b.to_string() + ", " + c.to_string(); };
    rec.check((a + b) + c == a + (b + c), w);
    rec.check((a * b) * c == a * (b * c), w);
    rec.check(a * (b + c) == a * b + a * c, w);
    rec.check(a + b == b + a && a * b == b * a, w);
    if (!b.is_zero()) rec.check((a / b) * b == a, w);
    if (a <= b) rec.check(a + c <= b + c, w);
    if (a.sign() >= 0 && b.sign() >= 0) rec.check((a * b).sign() >= 0, w);
  }
  return rec.done();
}

// -------------------------------------------------------------------- cone

SuiteResult order_partial_order(std::size_t trials, std::uint64_t seed) {
  Recorder rec("order.partial_order", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Cone c = random_proper_cone(rng);
    const std::size_t n = c.ambient_dim();
    const Vector x = random_rational_vector(n, rng);
    const Vector z1 = rng.coin(0.1) ? Vector::zeros(n) : random_cone_point(c, rng);
    const Vector y = x + z1;
    const Vector w = y + random_cone_point(c, rng);
    auto wit = [&] { return c.kind() + ": " + x.to_string() + " <= " + y.to_string(); };
    rec.check(leq(x, x, c), wit);
    rec.check(leq(x, y, c) && leq(y, w, c) && leq(x, w, c), wit);
    // Antisymmetry: y <= x only when y = x.
    rec.check(!leq(y, x, c) || y == x, wit);
    const Vector u = random_rational_vector(n, rng);
    if (leq(u, x, c) && leq(x, u, c)) rec.check(u == x, wit);
  }
  return rec.done();
}

SuiteResult cone_self_duality(std::size_t trials, std::uint64_t seed) {
  Recorder rec("cone.self_duality", trials);
  const auto rep = self_duality_report(Cone::minkowski_future(2), GramForm::minkowski(2), trials, seed);
  rec.check(rep.holds && rep.forward_holds && rep.backward_holds, [&] { return "Minkowski R^3: " + rep.detail; });
  rec.metric("samples", static_cast<double>(rep.samples));

  const Cone sub = Cone::polyhedral({Vector{Scalar(1), Scalar(0)}, Vector{Scalar(1), Scalar(1)}});
  const auto strict = self_duality_report(sub, GramForm::minkowski(1), trials, seed);
  rec.check(!strict.holds && strict.witness.has_value(), [] { return std::string("subcone reported self-dual"); });
  if (strict.witness) rec.check(!contains(sub, *strict.witness) && dual_contains(sub, GramForm::minkowski(1), *strict.witness),
                                [&] { return "bad witness " + strict.witness->to_string(); });

  Rng rng(seed);
  for (int i = 0; i < 2; ++i) {
    const LorentzFrame f = random_lorentz_frame(pick(rng, 1, 3), rng);
    const auto r = self_duality_report(frame_cone(f), f.form(), std::max<std::size_t>(trials / 10, 1), seed + 1 + i);
    rec.check(r.holds, [&] { return "random frame: " + r.detail; });
  }
  return rec.done();
}

// -------------------------------------------------------------------- span

Cone span_cone(Rng& rng) {
  return rng.coin() ? Cone::orthant(pick(rng, 1, 4)) : Cone::minkowski_future(pick(rng, 1, 3));
}

SuiteResult span_equivalence(std::size_t trials, std::uint64_t seed) {
  Recorder rec("span.equivalence", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Cone c = span_cone(rng);
    auto pt = [&] { return random_cone_point(c, rng); };
    const FormalDifference a(pt(), pt(), c);
    const Vector z1 = pt(), z2 = pt();
    const FormalDifference b(a.pos() + z1, a.neg() + z1, c);
    const FormalDifference d(b.pos() + z2, b.neg() + z2, c);
    const FormalDifference e(pt(), pt(), c);
    auto w = [&] { return a.to_string() + " ~ " + b.to_string(); };
    rec.check(equiv(a, a), w);
    rec.check(equiv(a, b) && equiv(b, a), w);
    rec.check(equiv(b, d) && equiv(a, d), w);
    rec.check(equiv(a, e) == (a.value() == e.value()), w);
    if (equiv(a, e)) rec.check(equiv(e, a), w);
  }
  return rec.done();
}

SuiteResult span_universal(std::size_t trials, std::uint64_t seed) {
  Recorder rec("span.universal", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Cone c = span_cone(rng);
    const std::size_t n = c.ambient_dim(), m = pick(rng, 1, 3);
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = nonneg(rng);
    }
    const ConeMap f = [&a](const Vector& v) { return a * v; };
    const Vector x = random_cone_point(c, rng);
    rec.check(extend_linear(f, embed(x, c)) == f(x), [&] { return "f~(iota x) != f(x) at " + x.to_string(); });
    const FormalDifference d(random_cone_point(c, rng), random_cone_point(c, rng), c);
    const Vector z = random_cone_point(c, rng);
    const FormalDifference d2(d.pos() + z, d.neg() + z, c);
    rec.check(extend_linear(f, d) == extend_linear(f, d2), [&] { return "f~ differs on " + d.to_string(); });
    if (c.as<Orthant>()) rec.check(equiv(d, canonicalize(d)), [&] { return "canonicalize " + d.to_string(); });
  }
  return rec.done();
}

SuiteResult span_future_decompose(std::size_t trials, std::uint64_t seed) {
  Recorder rec("span.future_decompose", trials);
  Rng rng(seed);
  const Rational step(1, 1000);
  for (std::size_t k = 0; k < trials; ++k) {
    const LorentzFrame f = any_frame(pick(rng, 1, 5), rng);
    const Cone c = frame_cone(f);
    const Vector x = random_rational_vector(f.t().dim(), rng);
    const FutureSplit s = future_decompose(x, f);
    auto w = [&] { return "x = " + x.to_string(); };
    rec.check(s.v1 - s.v2 == x, w);
    rec.check(contains(c, s.v1) && contains(c, s.v2), w);
    if (s.lambda_star > 0) rec.check(!future_split_holds(x, f, s.lambda - step), w);
    if (s.lambda_exact) rec.count("exact_lambda");
  }
  return rec.done();
}

// ----------------------------------------------------------------- hypnorm

SuiteResult hypnorm_reverse_triangle(std::size_t trials, std::uint64_t seed) {
  Recorder rec("hypnorm.reverse_triangle", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t family = pick(rng, 0, 4);
    std::optional<HyperbolicNorm> h;
    if (family <= 1) {
      h = random_quadratic_norm(rng, 7);
    } else if (family == 2) {
      h = HyperbolicNorm::p_hyperbolic(rng.coin() ? 1 : 3, pick(rng, 1, 7));
    } else {
      std::vector<Scalar> mu;
      for (std::size_t i = 0, n = pick(rng, 1, 8); i < n; ++i) mu.emplace_back(Rational(pick(rng, 1, 9), pick(rng, 1, 4)));
      const double qs[] = {0.5, 1.0 / 3, 0.9};
      h = HyperbolicNorm::discrete_lq(qs[pick(rng, 0, 2)], mu);
    }
    const Vector u = random_cone_point(h->cone(), rng), v = random_cone_point(h->cone(), rng);
    auto w = [&] { return h->kind() + ": " + pair_str(u, v); };
    if (auto s = reverse_triangle_sign(*h, u, v)) {
      rec.check(*s >= 0, w);
      rec.count("exact_checks");
    } else {
      const double r = reverse_triangle_residual(*h, u, v);
      rec.check(r >= -1e-9 * (1 + norm_eval(*h, u) + norm_eval(*h, v)), w);
    }
    if (h->exact_squares()) rec.check(*reverse_cs_residual(*h, u, v).holds, w);
  }
  return rec.done();
}

SuiteResult hypnorm_polarizability(std::size_t trials, std::uint64_t seed) {
  Recorder rec("hypnorm.polarizability", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const HyperbolicNorm h = random_quadratic_norm(rng, 7);
    const Vector v = random_cone_point(h.cone(), rng), w = random_cone_point(h.cone(), rng);
    rec.check(polarizability_residual(h, v, w).is_zero(), [&] { return h.kind() + ": " + pair_str(v, w); });
  }
  // Non-quadratic families: the listed witness and a sampled one.
  const Vector v{Scalar(1), Scalar(1)}, w{Scalar(1), Scalar(-1)};
  const Scalar r1 = polarizability_residual(HyperbolicNorm::p_hyperbolic(1, 1), v, w);
  const double r3 = polarizability_residual(HyperbolicNorm::p_hyperbolic(3, 1), v, w).to_double();
  rec.metric("p1_residual", r1.to_double());
  rec.metric("p3_residual", r3);
  rec.check(r1 == Scalar(-4), [&] { return "p=1 residual " + r1.to_string(); });
  rec.check(std::fabs(r3 - (std::cbrt(26.0 * 26.0) - 8)) <= 1e-6, [&] { return "p=3 residual " + format_double(r3); });
  for (double p : {1.0, 3.0}) {
    const HyperbolicNorm h = HyperbolicNorm::p_hyperbolic(p, 1);
    double best = 0;
    for (std::size_t k = 0; k < std::max<std::size_t>(trials / 10, 20); ++k) {
      const Vector a = random_cone_point(h.cone(), rng), b = random_cone_point(h.cone(), rng);
      best = std::max(best, std::fabs(polarizability_residual(h, a, b).to_double()));
    }
    rec.metric(p == 1 ? "p1_max_abs_residual" : "p3_max_abs_residual", best);
    rec.check(best > 0.5, [&] { return "no large residual found for p = " + format_double(p); });
  }
  return rec.done();
}

SuiteResult hypnorm_bilinear(std::size_t trials, std::uint64_t seed) {
  Recorder rec("hypnorm.bilinear", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const HyperbolicNorm h = random_quadratic_norm(rng, 5);
    const Vector u = random_cone_point(h.cone(), rng), v = random_cone_point(h.cone(), rng),
                 w = random_cone_point(h.cone(), rng);
    const Scalar lam = nonneg(rng), mu = nonneg(rng);
    auto wit = [&] { return h.kind() + ": " + u.to_string() + ", " + pair_str(v, w); };
    rec.check(polar_inner(h, v * lam + w * mu, u) == lam * polar_inner(h, v, u) + mu * polar_inner(h, w, u), wit);
    rec.check(polar_inner(h, u, v) == polar_inner(h, v, u), wit);
    rec.check(polar_inner(h, u, u) == norm_sq_eval(h, u), wit);
  }
  return rec.done();
}

SuiteResult hypnorm_homogeneity(std::size_t trials, std::uint64_t seed) {
  Recorder rec("hypnorm.homogeneity", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    std::vector<HyperbolicNorm> hs = {HyperbolicNorm::p_hyperbolic(2, n), HyperbolicNorm::p_hyperbolic(1, n),
                                      HyperbolicNorm::p_hyperbolic(3, n),
                                      HyperbolicNorm::discrete_lq(0.5, std::vector<Scalar>(n + 1, Scalar(1)))};
    const HyperbolicNorm& h = hs[pick(rng, 0, 3)];
    const Vector x = random_cone_point(h.cone(), rng);
    const Scalar lam = nonneg(rng);
    auto w = [&] { return h.kind() + ": " + x.to_string() + " * " + lam.to_string(); };
    const double a = norm_eval(h, x * lam), b = lam.to_double() * norm_eval(h, x);
    // Near the boundary x0^p - sum |xi|^p cancels; the p-th root then carries
    // an absolute error of order eps^(1/p) * |x|.
    double scale = 0;
    for (double c : x.to_doubles()) scale = std::max(scale, lam.to_double() * std::fabs(c));
    rec.check(std::fabs(a - b) <= 1e-9 * (1 + std::fabs(b)) + 1e-5 * scale, w);
    if (h.exact_squares()) rec.check(norm_sq_eval(h, x * lam) == lam * lam * norm_sq_eval(h, x), w);
  }
  return rec.done();
}

SuiteResult hypnorm_strict(std::size_t trials, std::uint64_t seed) {
  Recorder rec("hypnorm.strict", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const HyperbolicNorm h = random_quadratic_norm(rng, 5);
    Vector u = random_cone_point(h.cone(), rng);
    Vector v = rng.coin(0.3) ? u * nonneg(rng) : random_cone_point(h.cone(), rng);
    if (rng.coin()) std::swap(u, v);
    const EqualityResult e = equality_is_collinear(h, u, v);
    rec.check(e.equality == e.collinear, [&] { return h.kind() + ": " + pair_str(u, v); });
    if (e.equality) rec.count("equality_cases");
  }
  return rec.done();
}

// ----------------------------------------------------------------- lorentz

SuiteResult lorentz_minkowski_recovery(std::size_t, std::uint64_t) {
  Recorder rec("lorentz.minkowski_recovery", 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Vector> basis = {Vector::unit(n + 1, 0)};
    for (std::size_t j = 1; j <= n; ++j) basis.push_back(Vector::unit(n + 1, 0) + Vector::unit(n + 1, j));
    const GramForm g = gram_from_cone_basis(HyperbolicNorm::p_hyperbolic(2, n), basis);
    std::vector<Scalar> diag(n + 1, Scalar(-1));
    diag[0] = Scalar(1);
    rec.check(g.metric() == SymMatrix::diagonal(diag), [&] { return "n = " + std::to_string(n) + ": " + g.metric().matrix().to_string(); });
    // <e0 + ei, e0 + ej> = 1 - [i = j > 0].
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        rec.check(g.gram()(i, j) == Scalar(i == j && i > 0 ? 0 : 1), [&] { return "gram entry " + std::to_string(i) + "," + std::to_string(j); });
      }
    }
  }
  return rec.done();
}

SuiteResult lorentz_nondegenerate(std::size_t trials, std::uint64_t seed) {
  Recorder rec("lorentz.nondegenerate", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const HyperbolicNorm h = HyperbolicNorm::p_hyperbolic(2, n);
    std::vector<Vector> basis;
    do {
      basis.clear();
      for (std::size_t i = 0; i <= n; ++i) basis.push_back(random_cone_point(h.cone(), rng));
    } while (rank(Matrix::from_columns(basis)) != n + 1);
    const GramForm g = gram_from_cone_basis(h, basis);
    const Signature s = classify(g);
    auto w = [&] { return "basis " + Matrix::from_columns(basis).to_string(); };
    rec.check(!determinant(g.gram().matrix()).is_zero(), w);
    rec.check(s.kind == SignatureKind::kLorentzian && s.n_minus == n, w);
  }
  return rec.done();
}

SuiteResult lorentz_decomposition(std::size_t trials, std::uint64_t seed) {
  Recorder rec("lorentz.decomposition", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const LorentzFrame f = any_frame(pick(rng, 1, 5), rng);
    const GramForm& g = f.form();
    const Vector v = random_rational_vector(f.t().dim(), rng);
    const Decomposition d = decompose(f, v);
    auto w = [&] { return "v = " + v.to_string(); };
    rec.check(f.t() * d.alpha + d.w == v && g.inner(d.w, f.t()).is_zero(), w);
    if (!v.is_zero()) rec.check(wick_inner(f, v, v).sign() > 0, w);

    const Vector x = future_sample(f, rng), y = future_sample(f, rng);
    auto wp = [&] { return "pair " + pair_str(x, y); };
    const CausalClass cx = causal_class(f, x);
    rec.check(cx == CausalClass::kFutureCausal || cx == CausalClass::kZero, wp);
    rec.check(x.is_zero() || causal_class(f, -x) == CausalClass::kPastCausal, wp);
    const FutureDefect fd = future_defect(f, x);
    rec.check(fd.exact_sign >= 0 && fd.defect >= -1e-9, wp);
    rec.check(wick_inner(f, x, y).sign() >= 0, wp);
    const Scalar ip = g.inner(x, y);
    rec.check(ip.sign() >= 0 && ip * ip >= g.quad(x) * g.quad(y), wp);
  }
  return rec.done();
}

SuiteResult lorentz_positive_on_core(std::size_t trials, std::uint64_t seed) {
  Recorder rec("lorentz.positive_on_core", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 4);
    const LorentzFrame f = any_frame(n, rng);
    const Cone c = frame_cone(f);
    const Vector v = rng.coin(0.2) && f.form() == GramForm::minkowski(n) ? random_null_vector(n, rng) : future_sample(f, rng);
    if (in_core(c, v).in_core) {
      rec.check(f.form().quad(v).sign() > 0, [&] { return "core point " + v.to_string(); });
      rec.count("core_points");
    }
  }
  return rec.done();
}

// --------------------------------------------------------------- extension

struct Instance {
  Cone cone;
  BaseNorm base;
};

Instance random_instance_2d(Rng& rng) {
  const BaseNorm simple[] = {BaseNorm::l1(), BaseNorm::l2(), BaseNorm::linf()};
  switch (pick(rng, 0, 2)) {
    case 0:
      return {Cone::minkowski_future(1), rng.coin() ? BaseNorm::wick(LorentzFrame::minkowski(1)) : simple[pick(rng, 0, 2)]};
    case 1: {
      const LorentzFrame f = random_lorentz_frame(1, rng);
      return {frame_cone(f), rng.coin() ? BaseNorm::wick(f) : simple[pick(rng, 0, 2)]};
    }
    default: {
      Vector a, b;
      do {
        a = random_rational_vector(2, rng);
        b = random_rational_vector(2, rng);
      } while (rank(Matrix::from_columns({a, b})) != 2);
      return {Cone::polyhedral({a, b}), simple[pick(rng, 0, 2)]};
    }
  }
}

double tilde(const Cone& c, const BaseNorm& n, const Vector& x) {
  return extended_norm(ExtensionProblem{c, n, x, {}}).value;
}

SuiteResult extension_agrees_on_cone(std::size_t trials, std::uint64_t seed) {
  Recorder rec("extension.agrees_on_cone", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    Instance in = rng.coin(0.7) ? Instance{Cone::minkowski_future(pick(rng, 1, 3)), BaseNorm::l2()} : random_instance_2d(rng);
    if (in.cone.as<FutureCone>() && rng.coin(0.7)) {
      const std::size_t n = in.cone.ambient_dim() - 1;
      in = {Cone::minkowski_future(n), BaseNorm::wick(LorentzFrame::minkowski(n))};
    }
    const Vector x = random_cone_point(in.cone, rng);
    const double gap = std::fabs(tilde(in.cone, in.base, x) - base_norm_eval(in.base, x));
    rec.max_metric("max_gap", gap);
    rec.check(gap <= 1e-6, [&] { return in.cone.kind() + "/" + in.base.name() + ": x = " + x.to_string(); });
  }
  return rec.done();
}

SuiteResult extension_oracle(std::size_t trials, std::uint64_t seed) {
  Recorder rec("extension.oracle", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Instance in = random_instance_2d(rng);
    const Vector x = random_rational_vector(2, rng, {3, 4, 0});
    ExtensionProblem p{in.cone, in.base, x, {}};
    const double solved = extended_norm(p).value;
    p.solver.kind = SolverKind::kGridOracle;
    const double oracle = grid_oracle(p);
    const double gap = std::fabs(solved - oracle);
    rec.max_metric("max_gap", gap);
    auto w = [&] { return in.cone.kind() + "/" + in.base.name() + ": x = " + x.to_string(); };
    rec.check(gap <= 3e-3, w);
    rec.check(oracle >= solved - 1e-7 * (1 + solved), w);
  }
  return rec.done();
}

SuiteResult extension_norm_axioms(std::size_t trials, std::uint64_t seed) {
  Recorder rec("extension.norm_axioms", trials);
  Rng rng(seed);
  const double tol = 1e-3;
  for (std::size_t k = 0; k < trials; ++k) {
    const Instance in = rng.coin() ? random_instance_2d(rng)
                                   : Instance{Cone::minkowski_future(2), BaseNorm::wick(LorentzFrame::minkowski(2))};
    const std::size_t n = in.cone.ambient_dim();
    const Vector x = random_rational_vector(n, rng), y = random_rational_vector(n, rng);
    const Scalar lam(Rational(pick(rng, 1, 30), pick(rng, 1, 8)));
    const double tx = tilde(in.cone, in.base, x), ty = tilde(in.cone, in.base, y);
    auto w = [&] { return in.cone.kind() + "/" + in.base.name() + ": " + pair_str(x, y); };
    rec.check(tilde(in.cone, in.base, x + y) <= tx + ty + 2 * tol, w);
    rec.check(std::fabs(tilde(in.cone, in.base, x * lam) - lam.to_double() * tx) <= tol * lam.to_double() * tx + 1e-9, w);
    rec.check(std::fabs(tilde(in.cone, in.base, -x) - tx) <= tol, w);
    rec.check(base_norm_eval(in.base, x) <= tx + tol, w);
  }
  return rec.done();
}

SuiteResult extension_equivalence(std::size_t trials, std::uint64_t seed) {
  Recorder rec("extension.equivalence", trials);
  const Cone c = Cone::minkowski_future(1);
  const BaseNorm n = BaseNorm::wick(LorentzFrame::minkowski(1));
  const Vector s{Scalar(1), Scalar(0)};
  const double k_const = equivalence_constant(c, n, s, Scalar::exact(1, 2));
  rec.metric("K", k_const);
  rec.check(k_const == 5, [&] { return "K = " + format_double(k_const); });
  bool threw = false;
  try {
    equivalence_constant(c, n, s, Scalar(1));
  } catch (const Error& e) {
    threw = e.code() == Errc::kBallNotContained;
  }
  rec.check(threw, [] { return std::string("delta = 1 accepted"); });
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Vector x = random_rational_vector(2, rng);
    const double t = tilde(c, n, x), b = base_norm_eval(n, x);
    rec.max_metric("max_ratio", b > 0 ? t / b : 0);
    rec.check(t <= k_const * b + 1e-9, [&] { return "x = " + x.to_string(); });
  }
  return rec.done();
}

// ------------------------------------------------------------------- order

SuiteResult order_monotone_wick(std::size_t trials, std::uint64_t seed) {
  Recorder rec("order.monotone_wick", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const LorentzFrame f = any_frame(pick(rng, 1, 5), rng);
    const Cone c = frame_cone(f);
    const Vector x = future_sample(f, rng), z = future_sample(f, rng);
    rec.check(monotone_wick_check(f, c, x, x + z), [&] { return pair_str(x, z); });
  }
  return rec.done();
}

SuiteResult order_certificate(std::size_t trials, std::uint64_t seed) {
  Recorder rec("order.certificate", trials);
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const LorentzFrame f = any_frame(pick(rng, 1, 3), rng);
    const Cone c = frame_cone(f);
    const Vector target = future_sample(f, rng);
    GeometricRule rule;
    rule.target = target;
    rule.ratio = Rational(1, static_cast<unsigned long>(pick(rng, 2, 4)));
    if (rng.coin()) rule.start = target - future_sample(f, rng);
    rule.n = 64;
    const OrderedSequence s{c, f, generate(rule)};
    auto w = [&] { return "target " + target.to_string(); };
    for (const auto& cert : {completeness_certificate(s, target),
                             backward_completeness_certificate(reversed(s), -target)}) {
      rec.check(cert.alpha_monotone && cert.cauchy_bound_ok && cert.converged, w);
      rec.check(cert.max_residual < kLimitThreshold, w);
      rec.max_metric("max_tail_residual", cert.max_residual);
    }
  }
  return rec.done();
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = {
      {"numerics.field", "field and order axioms of Q", 1000, numerics_field},
      {"order.partial_order", "reflexive, transitive, antisymmetric cone order", 1000, order_partial_order},
      {"cone.self_duality", "future cone self-dual, strict subcone not", 10000, cone_self_duality},
      {"span.equivalence", "formal difference equivalence relation", 1000, span_equivalence},
      {"span.universal", "f = f~ o iota and well-definedness", 1000, span_universal},
      {"span.future_decompose", "x = v1 - v2 with minimal lambda", 10000, span_future_decompose},
      {"hypnorm.reverse_triangle", "reverse triangle and reverse Cauchy-Schwarz", 10000, hypnorm_reverse_triangle},
      {"hypnorm.polarizability", "polarization identity dichotomy", 10000, hypnorm_polarizability},
      {"hypnorm.bilinear", "polar inner product bilinear and symmetric", 1000, hypnorm_bilinear},
      {"hypnorm.homogeneity", "1-homogeneity of every family", 1000, hypnorm_homogeneity},
      {"hypnorm.strict", "equality iff collinear", 10000, hypnorm_strict},
      {"lorentz.minkowski_recovery", "Gram on e0, e0+ej recovers Minkowski", 5, lorentz_minkowski_recovery},
      {"lorentz.nondegenerate", "random cone bases give Lorentzian Gram", 100, lorentz_nondegenerate},
      {"lorentz.decomposition", "decomposition, Wick positivity, future defect", 10000, lorentz_decomposition},
      {"lorentz.positive_on_core", "core points have <v,v> > 0", 1000, lorentz_positive_on_core},
      {"extension.agrees_on_cone", "extended norm equals n on F", 1000, extension_agrees_on_cone},
      {"extension.oracle", "solver against grid oracle in 2-D", 100, extension_oracle},
      {"extension.norm_axioms", "extended norm is a norm", 200, extension_norm_axioms},
      {"extension.equivalence", "n~ <= K n with K = 5", 1000, extension_equivalence},
      {"order.monotone_wick", "Wick norm monotone on F", 10000, order_monotone_wick},
      {"order.certificate", "completeness certificate on geometric sequences", 100, order_certificate},
  };
  return registry;
}

SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return s.run(trials ? trials : s.default_trials, seed);
  }
  throw Error(Errc::kInvalidArgument, "unknown suite \"" + name + "\"");
}

}  // namespace conekit
