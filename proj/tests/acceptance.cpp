// Acceptance run: one PASS/FAIL line per criterion at the pinned counts and
// tolerances. Expected values come from oracles written here against raw
// rationals (Minkowski and Wick quadratic forms, Bareiss determinants, the
// closed-form lambda), not from the library routine under test.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "conekit/extension.hpp"
#include "conekit/order.hpp"
#include "conekit/sampling.hpp"
#include "conekit/scenario.hpp"
#include "conekit/span.hpp"
#include "conekit/suites.hpp"

using namespace conekit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// ------------------------------------------------------------------ oracles

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

QVec raw(const Vector& v) {
  QVec out;
  for (const auto& s : v.coords()) out.push_back(s.rational());
  return out;
}

QMat raw(const SymMatrix& m) {
  QMat out(m.dim(), QVec(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j).rational();
  }
  return out;
}

Q eta(const QVec& a, const QVec& b) {
  Q s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

Q bilinear(const QMat& m, const QVec& a, const QVec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * m[i][j] * b[j];
  }
  return s;
}

QVec add(const QVec& a, const QVec& b, const Q& s = 1) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

QMat minkowski(std::size_t n) {
  QMat m(n + 1, QVec(n + 1, 0));
  m[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) m[i][i] = -1;
  return m;
}

// Wick matrix W = 2 (Mt)(Mt)^T - M.
QMat wick_matrix(const QMat& m, const QVec& t) {
  const std::size_t n = t.size();
  QVec mt(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mt[i] += m[i][j] * t[j];
  }
  QMat w(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = 2 * mt[i] * mt[j] - m[i][j];
  }
  return w;
}

bool future_causal(const QMat& m, const QVec& t, const QVec& x) {
  return bilinear(m, x, x) >= 0 && bilinear(m, x, t) >= 0;
}

// Fraction-free Gaussian elimination.
Q bareiss_det(QMat a) {
  const std::size_t n = a.size();
  Q prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// v = c w or w = c v with c >= 0.
bool collinear_nonneg(const QVec& v, const QVec& w) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] * w[j] != v[j] * w[i]) return false;
    }
  }
  Q d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * w[i];
  return d >= 0;
}

double euclid(const Vector& x) {
  double s = 0;
  for (double c : x.to_doubles()) s += c * c;
  return std::sqrt(s);
}

// ------------------------------------------------------------------ harness

struct Criterion {
  bool pass = true;
  std::string first_failure;
  std::ostringstream detail;

  template <class F>
  void check(bool ok, F&& why) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    first_failure = why();
  }
  void fail_on_throw(const std::exception& e) { check(false, [&] { return std::string("threw ") + e.what(); }); }
};

int report(int id, const char* title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail_on_throw(e);
  }
  std::printf("%s [%d] %s: %s", c.pass ? "PASS" : "FAIL", id, title, c.detail.str().c_str());
  if (!c.pass) std::printf(" | first failure: %s", c.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return c.pass ? 0 : 1;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

std::string str(const Vector& v) { return v.to_string(); }

// ---------------------------------------------------------------- criteria

void c1_minkowski(Criterion& c) {
  std::size_t entries = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Vector> basis = {Vector::unit(n + 1, 0)};
    for (std::size_t j = 1; j <= n; ++j) basis.push_back(Vector::unit(n + 1, 0) + Vector::unit(n + 1, j));
    const GramForm g = gram_from_cone_basis(HyperbolicNorm::p_hyperbolic(2, n), basis);
    const QMat gram = raw(g.gram());
    // Standard coordinates: e0 = b0, ej = bj - b0.
    auto e = [&](std::size_t i, std::size_t j) -> Q {
      if (i == 0 && j == 0) return gram[0][0];
      if (i == 0) return gram[0][j] - gram[0][0];
      if (j == 0) return gram[i][0] - gram[0][0];
      return gram[i][j] - gram[i][0] - gram[0][j] + gram[0][0];
    };
    const QMat eta_n = minkowski(n);
    const QMat metric = raw(g.metric());
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        const Q residual = e(i, j) - eta_n[i][j];
        c.check(residual == 0 && metric[i][j] == eta_n[i][j], [&] {
          return "n=" + std::to_string(n) + " entry " + std::to_string(i) + "," + std::to_string(j);
        });
        ++entries;
      }
    }
  }
  c.detail << "n=1..5, " << entries << " metric entries, rational residual 0";
}

void c2_polarizability(Criterion& c) {
  Rng rng(kSeed + 2);
  const std::size_t trials = 10000;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const HyperbolicNorm h = HyperbolicNorm::p_hyperbolic(2, n);
    const Vector v = random_cone_point(h.cone(), rng), w = random_cone_point(h.cone(), rng);
    const QVec a = raw(v), b = raw(w);
    c.check(a[0] >= 0 && eta(a, a) >= 0 && b[0] >= 0 && eta(b, b) >= 0, [&] { return "sample outside cone"; });
    const Q oracle = eta(add(a, b, 2), add(a, b, 2)) + eta(a, a) - 2 * eta(add(a, b), add(a, b)) - 2 * eta(b, b);
    const Scalar r = polarizability_residual(h, v, w);
    c.check(r.is_exact() && r.is_zero() && oracle == 0, [&] { return "p=2 " + str(v) + ", " + str(w); });
  }
  const Vector v{1, 1}, w{1, -1};
  const Scalar p1 = polarizability_residual(HyperbolicNorm::p_hyperbolic(1, 1), v, w);
  c.check(p1.is_exact() && p1 == Scalar(-4), [&] { return "p=1 residual " + p1.to_string(); });
  const double p3 = polarizability_residual(HyperbolicNorm::p_hyperbolic(3, 1), v, w).to_double();
  const double p3_oracle = std::cbrt(26.0) * std::cbrt(26.0) - 8;
  c.check(std::fabs(p3 - p3_oracle) <= 1e-6, [&] { return "p=3 residual " + format_double(p3); });
  c.detail << "p=2 residual exactly 0 on " << trials << " pairs; p=1 witness " << p1.to_string() << "; p=3 witness "
           << format_double(p3) << " (oracle " << format_double(p3_oracle) << ", tol 1e-6)";
}

void c3_reverse(Criterion& c) {
  Rng rng(kSeed + 3);
  const std::size_t trials = 10000;
  std::size_t equalities = 0, p2_pairs = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 7);  // ambient dimension <= 8
    std::optional<HyperbolicNorm> h;
    QMat m;
    if (rng.coin()) {
      h = HyperbolicNorm::p_hyperbolic(2, n);
      m = minkowski(n);
      ++p2_pairs;
    } else {
      const LorentzFrame f = random_lorentz_frame(n, rng);
      h = HyperbolicNorm::form_induced(f.form(), f.t());
      m = raw(f.form().gram());
    }
    Vector u = random_cone_point(h->cone(), rng);
    Vector v = rng.coin(0.3) ? u * Scalar(rng.nonneg_rational(6, 4)) : random_cone_point(h->cone(), rng);
    const QVec a = raw(u), b = raw(v);
    const Q A = bilinear(m, add(a, b), add(a, b)), B = bilinear(m, a, a), C = bilinear(m, b, b);
    // sqrt(A) >= sqrt(B) + sqrt(C)  iff  D = A - B - C >= 0 and D^2 >= 4BC.
    const Q D = A - B - C;
    const bool oracle_holds = D >= 0 && D * D >= 4 * B * C;
    const bool oracle_equal = D >= 0 && D * D == 4 * B * C;
    const auto sign = reverse_triangle_sign(*h, u, v);
    auto w = [&] { return h->kind() + " " + str(u) + ", " + str(v); };
    c.check(sign && *sign >= 0 && oracle_holds, w);
    c.check(sign && (*sign == 0) == oracle_equal, w);
    const ReverseCsResult cs = reverse_cs_residual(*h, u, v);
    const Q ip = bilinear(m, a, b);
    c.check(cs.holds && *cs.holds && ip >= 0 && ip * ip >= B * C, w);
    const EqualityResult eq = equality_is_collinear(*h, u, v);
    const bool col = collinear_nonneg(a, b);
    c.check(eq.equality == oracle_equal && eq.collinear == col && oracle_equal == col, w);
    if (oracle_equal) ++equalities;
  }
  c.detail << trials << " pairs (" << p2_pairs << " p=2, " << trials - p2_pairs
           << " future cone), dims <= 8, residual signs >= 0 exactly, " << equalities
           << " equality cases all collinear and conversely";
}

void c4_nondegenerate(Criterion& c) {
  Rng rng(kSeed + 4);
  const std::size_t trials = 100;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const HyperbolicNorm h = HyperbolicNorm::p_hyperbolic(2, n);
    std::vector<Vector> basis;
    QMat bmat;
    do {
      basis.clear();
      bmat.assign(n + 1, QVec());
      for (std::size_t i = 0; i <= n; ++i) basis.push_back(random_cone_point(h.cone(), rng));
      for (std::size_t i = 0; i <= n; ++i) bmat[i] = raw(basis[i]);
    } while (bareiss_det(bmat) == 0);
    const GramForm g = gram_from_cone_basis(h, basis);
    const QMat gram = raw(g.gram());
    bool entries_ok = true;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) entries_ok = entries_ok && gram[i][j] == eta(bmat[i], bmat[j]);
    }
    // det(B^T eta B) = det(B)^2 (-1)^n.
    const Q db = bareiss_det(bmat);
    const Q expected_det = (n % 2 ? -1 : 1) * db * db;
    const Scalar det = determinant(g.gram().matrix());
    const Signature s = classify(g);
    auto w = [&] { return "n=" + std::to_string(n) + " basis " + Matrix::from_rows(basis).to_string(); };
    c.check(entries_ok, w);
    c.check(!det.is_zero() && det.rational() == expected_det, w);
    c.check(s.kind == SignatureKind::kLorentzian && s.n_minus == n, w);
  }
  c.detail << trials << " random bases, det(Gram) = (-1)^n det(B)^2 != 0 exactly, all Lorentzian(n)";
}

void c5_lorentz(Criterion& c) {
  Rng rng(kSeed + 5);
  const std::size_t trials = 10000;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const LorentzFrame f = rng.coin() ? LorentzFrame::minkowski(n) : random_lorentz_frame(n, rng);
    const QMat m = raw(f.form().gram());
    const QVec t = raw(f.t());
    const QMat wm = wick_matrix(m, t);
    const Vector v = random_rational_vector(n + 1, rng);
    const Decomposition d = decompose(f, v);
    const QVec x = raw(v);
    c.check(d.alpha.rational() == bilinear(m, x, t), [&] { return "alpha " + str(v); });
    c.check(f.t() * d.alpha + d.w == v, [&] { return "reconstruction " + str(v); });
    const Scalar wv = wick_inner(f, v, v);
    c.check(wv.rational() == bilinear(wm, x, x), [&] { return "wick oracle " + str(v); });
    if (!v.is_zero()) {
      ++nonzero;
      c.check(wv.sign() > 0, [&] { return "wick not positive " + str(v); });
    }
    const Vector y = sample_future_causal(f.form(), f.t(), Scalar(10), rng);
    const QVec yq = raw(y);
    c.check(future_causal(m, t, yq), [&] { return "sample not future causal"; });
    // defect sign: alpha^2 - wick(w,w) = <y,y>.
    const FutureDefect fd = future_defect(f, y);
    const int oracle_sign = sgn(bilinear(m, yq, yq));
    c.check(fd.exact_sign >= 0 && fd.exact_sign == oracle_sign, [&] { return "defect " + str(y); });
  }
  c.detail << trials << " decompositions exact, wick_inner > 0 on " << nonzero
           << " nonzero samples, future_defect >= 0 exactly on " << trials << " future-causal samples";
}

void c6_future_decompose(Criterion& c) {
  Rng rng(kSeed + 6);
  const std::size_t trials = 10000;
  std::size_t minimal_checked = 0;
  double worst_lambda = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const LorentzFrame f = LorentzFrame::minkowski(n);
    const QMat m = minkowski(n);
    const QVec t = raw(f.t());
    const Vector x = random_rational_vector(n + 1, rng);
    const FutureSplit s = future_decompose(x, f);
    const QVec xq = raw(x);
    auto w = [&] { return "x = " + str(x); };
    c.check(s.v1 - s.v2 == x, w);
    c.check(future_causal(m, t, raw(s.v1)) && future_causal(m, t, raw(s.v2)), w);
    // Minkowski closed form: (|x0| + |x_spatial|) / 2.
    double spatial = 0;
    for (std::size_t i = 1; i <= n; ++i) spatial += xq[i].get_d() * xq[i].get_d();
    const double oracle = (std::fabs(xq[0].get_d()) + std::sqrt(spatial)) / 2;
    worst_lambda = std::max(worst_lambda, std::fabs(oracle - s.lambda_star));
    c.check(std::fabs(oracle - s.lambda_star) <= 1e-12 * (1 + oracle), w);
    if (s.lambda_star > 0) {
      ++minimal_checked;
      const Q shrunk = Q(s.lambda) - Q(1, 1000);
      // v1' = shrunk t + x/2, v2' = shrunk t - x/2 must not both be future causal.
      const QVec half = add(QVec(n + 1, 0), xq, Q(1, 2));
      QVec st = t;
      for (auto& e : st) e *= shrunk;
      const bool oracle_ok = future_causal(m, t, add(st, half)) && future_causal(m, t, add(st, half, -1));
      c.check(!oracle_ok && !future_split_holds(x, f, s.lambda - Rational(1, 1000)), w);
    }
  }
  c.detail << trials << " splits, v1 - v2 = x exact, both future-causal; lambda* matches closed form (max err "
           << format_double(worst_lambda) << "); lambda* - 1e-3 infeasible on " << minimal_checked << " cases";
}

void c7_self_duality(Criterion& c) {
  const std::size_t samples = 10000;
  const SelfDualityReport r = self_duality_report(Cone::minkowski_future(2), GramForm::minkowski(2), samples, kSeed + 7);
  c.check(r.holds && r.forward_holds && r.backward_holds && r.samples == samples,
          [&] { return "Minkowski R^3 report: " + r.detail; });
  // Independent forward check on the same number of sampled pairs.
  Rng rng(kSeed + 77);
  const QMat m = minkowski(2);
  const Cone f = Cone::minkowski_future(2);
  for (std::size_t k = 0; k < samples; ++k) {
    const QVec a = raw(random_cone_point(f, rng)), b = raw(random_cone_point(f, rng));
    c.check(bilinear(m, a, b) >= 0, [] { return "pairing of cone points negative"; });
  }
  const Cone sub = Cone::polyhedral({Vector{1, 0}, Vector{1, 1}});
  const SelfDualityReport s = self_duality_report(sub, GramForm::minkowski(1), samples, kSeed + 7);
  c.check(!s.holds && s.witness.has_value(), [] { return std::string("strict subcone reported self-dual"); });
  if (s.witness) {
    const QVec w = raw(*s.witness);
    // Dual: <w,(1,0)> = w0 >= 0, <w,(1,1)> = w0 - w1 >= 0. Sub = {x0 >= x1 >= 0}.
    const bool in_dual = w[0] >= 0 && w[0] - w[1] >= 0;
    const bool in_sub = w[0] >= w[1] && w[1] >= 0;
    c.check(in_dual && !in_sub, [&] { return "bad witness " + str(*s.witness); });
    c.detail << "Minkowski R^3 holds on " << r.samples << " causal samples; Polyhedral{(1,0),(1,1)} fails with witness "
             << str(*s.witness);
  }
}

struct Instance {
  Cone cone;
  BaseNorm base;
};

Instance random_instance(Rng& rng) {
  const BaseNorm simple[] = {BaseNorm::l1(), BaseNorm::l2(), BaseNorm::linf()};
  switch (pick(rng, 0, 2)) {
    case 0:
      return {Cone::minkowski_future(1), rng.coin() ? BaseNorm::wick(LorentzFrame::minkowski(1)) : simple[pick(rng, 0, 2)]};
    case 1: {
      const LorentzFrame f = random_lorentz_frame(1, rng);
      return {Cone::future(f.form(), f.t()), rng.coin() ? BaseNorm::wick(f) : simple[pick(rng, 0, 2)]};
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

double tilde(const Cone& cone, const BaseNorm& base, const Vector& x) {
  return extended_norm(ExtensionProblem{cone, base, x, {}}).value;
}

void c8_extension(Criterion& c) {
  Rng rng(kSeed + 8);
  double max_oracle_gap = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    const Instance in = random_instance(rng);
    const Vector x = random_rational_vector(2, rng, {3, 4, 0});
    ExtensionProblem p{in.cone, in.base, x, {}};
    const double solved = extended_norm(p).value;
    p.solver.kind = SolverKind::kGridOracle;
    const double oracle = grid_oracle(p);
    max_oracle_gap = std::max(max_oracle_gap, std::fabs(solved - oracle));
    c.check(std::fabs(solved - oracle) <= 3e-3, [&] { return in.cone.kind() + "/" + in.base.name() + " x=" + str(x); });
  }

  const Cone mink = Cone::minkowski_future(1);
  const BaseNorm wick = BaseNorm::wick(LorentzFrame::minkowski(1));
  const double sqrt2 = tilde(mink, wick, Vector{0, 1});
  c.check(std::fabs(sqrt2 - std::sqrt(2.0)) <= 1e-3, [&] { return "n~((0,1)) = " + format_double(sqrt2); });

  // On F the Wick norm of the Minkowski frame is the Euclidean norm.
  double max_cone_gap = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    const std::size_t n = pick(rng, 1, 3);
    const Cone f = Cone::minkowski_future(n);
    const Vector x = random_cone_point(f, rng);
    const double gap = std::fabs(tilde(f, BaseNorm::wick(LorentzFrame::minkowski(n)), x) - euclid(x));
    max_cone_gap = std::max(max_cone_gap, gap);
    c.check(gap <= 1e-6, [&] { return "cone point " + str(x); });
  }

  const double k_const = equivalence_constant(mink, wick, Vector{1, 0}, Scalar::exact(1, 2));
  const double k_oracle = 2 * 1.0 / 0.5 + 1;
  c.check(k_const == k_oracle, [&] { return "K = " + format_double(k_const); });
  double max_ratio = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    const Vector x = random_rational_vector(2, rng);
    const double t = tilde(mink, wick, x), b = euclid(x);
    if (b > 0) max_ratio = std::max(max_ratio, t / b);
    c.check(t <= k_oracle * b + 1e-9, [&] { return "K bound x=" + str(x); });
  }
  c.detail << "oracle gap max " << format_double(max_oracle_gap) << " <= 3e-3 on 100 instances; n~((0,1)) = "
           << format_double(sqrt2) << "; |n~ - n| max " << format_double(max_cone_gap)
           << " <= 1e-6 on 1000 cone points; K = " << format_double(k_const) << ", max n~/n " << format_double(max_ratio)
           << " on 1000 x";
}

void c9_order(Criterion& c) {
  Rng rng(kSeed + 9);
  // Antisymmetry with an independent Minkowski / orthant order oracle.
  std::size_t triples = 1000, antisym_hits = 0;
  for (std::size_t k = 0; k < triples; ++k) {
    const std::size_t n = pick(rng, 1, 3);
    const bool mink = rng.coin();
    const Cone cone = mink ? Cone::minkowski_future(n) : Cone::orthant(n + 1);
    auto oracle_leq = [&](const QVec& a, const QVec& b) {
      const QVec d = add(b, a, -1);
      if (mink) return d[0] >= 0 && eta(d, d) >= 0;
      for (const auto& e : d) {
        if (e < 0) return false;
      }
      return true;
    };
    const Vector x = random_rational_vector(n + 1, rng);
    const Vector y = rng.coin(0.2) ? x : x + random_cone_point(cone, rng);
    const Vector z = y + random_cone_point(cone, rng);
    const QVec xq = raw(x), yq = raw(y), zq = raw(z);
    auto w = [&] { return cone.kind() + " " + str(x) + ", " + str(y); };
    c.check(leq(x, y, cone) == oracle_leq(xq, yq) && leq(y, x, cone) == oracle_leq(yq, xq), w);
    c.check(leq(x, z, cone), w);
    if (leq(x, y, cone) && leq(y, x, cone)) {
      ++antisym_hits;
      c.check(x == y, w);
    }
  }
  const SuiteResult po = run_suite("order.partial_order", 1000, kSeed + 9);
  c.check(po.passed(), [&] { return "partial order suite: " + po.witness.value_or(""); });

  std::size_t monotone = 10000;
  for (std::size_t k = 0; k < monotone; ++k) {
    const std::size_t n = pick(rng, 1, 5);
    const LorentzFrame f = rng.coin() ? LorentzFrame::minkowski(n) : random_lorentz_frame(n, rng);
    const Cone cone = Cone::future(f.form(), f.t());
    const Vector x = sample_future_causal(f.form(), f.t(), Scalar(10), rng);
    const Vector y = x + sample_future_causal(f.form(), f.t(), Scalar(10), rng);
    const QMat wm = wick_matrix(raw(f.form().gram()), raw(f.t()));
    const bool oracle = bilinear(wm, raw(x), raw(x)) <= bilinear(wm, raw(y), raw(y));
    c.check(oracle && monotone_wick_check(f, cone, x, y), [&] { return "monotone " + str(x) + " <= " + str(y); });
  }

  // Certificate: halving sequence toward t; limit oracle is t itself.
  GeometricRule rule;
  rule.target = Vector{1, 0, 0};
  rule.ratio = Rational(1, 2);
  rule.start = Vector{0, 0, 0};
  rule.n = 64;
  const OrderedSequence s{Cone::minkowski_future(2), LorentzFrame::minkowski(2), generate(rule)};
  const CompletenessCertificate cert = completeness_certificate(s, Vector{1, 0, 0});
  const double limit_err = euclid(cert.limit - Vector{1, 0, 0}.to_backend(cert.limit.backend()));
  c.check(cert.alpha_monotone && cert.cauchy_bound_ok && cert.converged && cert.max_residual < kLimitThreshold &&
              limit_err < 1e-9,
          [&] { return "halving certificate"; });
  const SuiteResult cs = run_suite("order.certificate", 100, kSeed + 9);
  c.check(cs.passed(), [&] { return "certificate suite: " + cs.witness.value_or(""); });
  c.detail << "antisymmetry on " << triples << " triples (" << antisym_hits << " two-way pairs, all equal) + "
           << po.checks << " partial-order checks; monotone Wick on " << monotone
           << " ordered pairs; certificates (a)(b) exact on 101 geometric sequences, max tail residual "
           << format_double(std::max(cert.max_residual, cs.metrics.count("max_tail_residual") ? cs.metrics.at("max_tail_residual") : 0.0))
           << " < 1e-9";
}

void c10_span(Criterion& c) {
  Rng rng(kSeed + 10);
  const std::size_t trials = 1000;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = pick(rng, 1, 3);
    const Cone cone = rng.coin() ? Cone::minkowski_future(n) : Cone::orthant(n + 1);
    auto draw = [&] { return random_cone_point(cone, rng); };
    // a ~ b ~ c by shifting both parts by cone elements.
    const Vector p = draw(), m = draw(), s1 = draw(), s2 = draw();
    const FormalDifference a(p, m, cone), b(p + s1, m + s1, cone), d(p + s2, m + s2, cone);
    const FormalDifference other(draw(), draw(), cone);
    auto w = [&] { return a.to_string(); };
    c.check(equiv(a, a) && equiv(a, b) && equiv(b, a) && equiv(b, d) && equiv(a, d), w);
    const bool oracle_other = raw(p + other.neg()) == raw(other.pos() + m);
    c.check(equiv(a, other) == oracle_other && equiv(other, a) == oracle_other, w);

    // Random nonnegative matrix F: (n+1) -> r, applied as the cone map.
    const std::size_t r = pick(rng, 1, 3);
    QMat fm(r, QVec(n + 1));
    for (auto& row : fm) {
      for (auto& e : row) e = rng.nonneg_rational(5, 4);
    }
    auto apply_raw = [&](const QVec& x) {
      QVec out(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j <= n; ++j) out[i] += fm[i][j] * x[j];
      }
      return out;
    };
    const ConeMap f = [&](const Vector& x) {
      std::vector<Scalar> out;
      for (const auto& e : apply_raw(raw(x))) out.emplace_back(Rational(e));
      return Vector(std::move(out));
    };
    const Vector x = draw();
    c.check(raw(extend_linear(f, embed(x, cone))) == apply_raw(raw(x)), w);
    c.check(extend_linear(f, a) == extend_linear(f, b) && extend_linear(f, a) == extend_linear(f, d), w);
    c.check(raw(extend_linear(f, a)) == add(apply_raw(raw(p)), apply_raw(raw(m)), -1), w);
  }
  c.detail << trials << " random instances: equiv reflexive, symmetric, transitive; f = f~ o iota exactly; "
           << "extend_linear constant on classes";
}

void c11_determinism(Criterion& c) {
  std::size_t runs = 0;
  for (const char* name : {"tour.json", "minkowski_p2.json"}) {
    const std::string path = std::string(CONEKIT_SCENARIOS) + "/" + name;
    RunOptions o;
    o.cli_seed = kSeed;
    const std::string a = strip_timing(run_scenario_file(path, o).report).dump();
    const std::string b = strip_timing(run_scenario_file(path, o).report).dump();
    c.check(a == b, [&] { return std::string(name) + " reports differ"; });
    runs += 2;
  }
  c.detail << runs << " runs of 2 scenarios with seed " << kSeed << ", byte-identical after stripping wall_time_ms";
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "Polarization recovers Minkowski", c1_minkowski);
  failures += report(2, "Polarizability dichotomy", c2_polarizability);
  failures += report(3, "Reverse triangle and reverse Cauchy-Schwarz", c3_reverse);
  failures += report(4, "Non-degeneracy", c4_nondegenerate);
  failures += report(5, "Lorentz decomposition and Wick", c5_lorentz);
  failures += report(6, "future_decompose", c6_future_decompose);
  failures += report(7, "Self-duality", c7_self_duality);
  failures += report(8, "Extended norm", c8_extension);
  failures += report(9, "Order suite", c9_order);
  failures += report(10, "Span construction", c10_span);
  failures += report(11, "Determinism", c11_determinism);
  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
