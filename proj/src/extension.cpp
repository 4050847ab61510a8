#include "conekit/extension.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "conekit/lp.hpp"
#include "conekit/sampling.hpp"

namespace conekit {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string BaseNorm::name() const {
  static const char* names[] = {"wick", "l1", "l2", "linf"};
  return names[static_cast<int>(kind)];
}

std::string solver_name(SolverKind k) {
  static const char* names[] = {"ellipsoid", "projected_subgradient", "grid_oracle"};
  return names[static_cast<int>(k)];
}

namespace {

VectorXd to_eigen(const Vector& v) {
  VectorXd r(static_cast<Eigen::Index>(v.dim()));
  for (std::size_t i = 0; i < v.dim(); ++i) r(static_cast<Eigen::Index>(i)) = v[i].to_double();
  return r;
}

Vector from_eigen(const VectorXd& v) {
  return Vector::from_doubles(std::vector<double>(v.data(), v.data() + v.size()));
}

Vector to_exact(const Vector& v) { return v.to_backend(Backend::kExact); }

MatrixXd metric_matrix(const GramForm& g) {
  const SymMatrix& m = g.metric();
  const auto n = static_cast<Eigen::Index>(m.dim());
  MatrixXd r(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      r(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
    }
  }
  return r;
}

// Generating cone in a form the solvers can use.
Cone normalize_cone(const Cone& c) {
  if (auto* o = c.as<Orthant>()) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < o->dim; ++i) gens.push_back(Vector::unit(o->dim, i));
    return Cone::polyhedral(std::move(gens));
  }
  if (auto* p = c.as<PCone>()) {
    if (p->p == 2) return Cone::minkowski_future(p->spatial_dim);
    if (p->p == 1 || std::isinf(p->p)) {
      // Both are polyhedral: p = 1 has rays (1, +-e_j), p = inf has (1, +-1, ..., +-1).
      const std::size_t n = p->spatial_dim;
      std::vector<Vector> gens;
      if (p->p == 1) {
        for (std::size_t j = 1; j <= n; ++j) {
          for (int s : {1, -1}) {
            std::vector<Scalar> v(n + 1, Scalar(0));
            v[0] = Scalar(1);
            v[j] = Scalar(s);
            gens.emplace_back(std::move(v));
          }
        }
      } else {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::vector<Scalar> v(n + 1, Scalar(1));
          for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1) v[j + 1] = Scalar(-1);
          }
          gens.emplace_back(std::move(v));
        }
      }
      if (n == 0) gens.push_back(Vector{Scalar(1)});
      return Cone::polyhedral(std::move(gens));
    }
    throw Error(Errc::kUnsupportedRepresentation, "extended norm of a p-cone needs p in {1, 2, inf}");
  }
  if (auto* p = c.as<PolyhedralCone>()) {
    if (p->generators.empty() || rank(Matrix::from_columns(p->generators)) != p->dim) {
      throw Error(Errc::kInfeasible, "polyhedral cone does not generate the ambient space");
    }
    return c;
  }
  const auto& f = *c.as<FutureCone>();
  if (!f.form.full_rank()) throw Error(Errc::kInfeasible, "future cone form does not span the ambient space");
  return c;
}

// Float separation oracle for a generating cone.
class ConeOracle {
 public:
  explicit ConeOracle(const Cone& c) {
    if (auto* p = c.as<PolyhedralCone>()) {
      for (const auto& a : polyhedral_facets(*p)) {
        VectorXd v = to_eigen(a);
        facets_.push_back(v / v.norm());
      }
      return;
    }
    const auto& f = *c.as<FutureCone>();
    future_ = true;
    m_ = metric_matrix(f.form);
    VectorXd t = to_eigen(f.t);
    t_ = t / std::sqrt(t.dot(m_ * t));
    mt_ = m_ * t_;
  }

  bool future() const { return future_; }

  // Smallest constraint value; >= 0 on F, scaled like |z|.
  double margin(const VectorXd& z) const {
    if (!future_) {
      double m = std::numeric_limits<double>::infinity();
      for (const auto& a : facets_) m = std::min(m, a.dot(z));
      return facets_.empty() ? 0.0 : m;
    }
    const double alpha = mt_.dot(z);
    const VectorXd w = z - alpha * t_;
    const double r = std::sqrt(std::max(0.0, -w.dot(m_ * w)));
    return std::min(alpha, alpha - r);
  }

  // Normal a with F inside { y : a.(y - z) >= 0 } when z is outside F.
  std::optional<VectorXd> cut(const VectorXd& z) const {
    if (!future_) {
      for (const auto& a : facets_) {
        if (a.dot(z) < 0) return a;
      }
      return std::nullopt;
    }
    const double alpha = mt_.dot(z);
    if (alpha < 0) return VectorXd(mt_);
    const VectorXd w = z - alpha * t_;
    const VectorXd mw = m_ * w;
    const double r = std::sqrt(std::max(0.0, -w.dot(mw)));
    if (r <= alpha) return std::nullopt;
    // Negative gradient of r(z) - alpha(z).
    return VectorXd(mw / r + mt_);
  }

  // Projection onto F in the solver metric (Euclidean for polyhedral,
  // Wick metric of t for the future cone).
  VectorXd project(const VectorXd& z, const MatrixXd& gens) const;

  const MatrixXd& metric() const { return m_; }
  const VectorXd& mt() const { return mt_; }

 private:
  bool future_ = false;
  std::vector<VectorXd> facets_;
  MatrixXd m_;
  VectorXd t_;
  VectorXd mt_;
};

// Lawson-Hanson nonnegative least squares: argmin |A x - b|, x >= 0.
VectorXd nnls(const MatrixXd& a, const VectorXd& b) {
  const Eigen::Index n = a.cols();
  VectorXd x = VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, a.norm() * b.norm());
  for (int outer = 0; outer < 3 * n + 10; ++outer) {
    VectorXd w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double wmax = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w(j) > wmax) {
        wmax = w(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 3 * n + 10; ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
      }
      MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
      VectorXd zp = ap.colPivHouseholderQr().solve(b);
      VectorXd z = VectorXd::Zero(n);
      for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(static_cast<Eigen::Index>(k));
      bool ok = true;
      for (auto j : idx) ok = ok && z(j) > 0;
      if (ok) {
        x = z;
        break;
      }
      double step = 1;
      for (auto j : idx) {
        if (z(j) <= 0) step = std::min(step, x(j) / (x(j) - z(j)));
      }
      x += step * (z - x);
      for (auto j : idx) {
        if (x(j) <= 1e-15) {
          x(j) = 0;
          passive[static_cast<std::size_t>(j)] = false;
        }
      }
    }
  }
  return x;
}

VectorXd ConeOracle::project(const VectorXd& z, const MatrixXd& gens) const {
  if (!future_) return gens * nnls(gens, z);
  const double alpha = mt_.dot(z);
  const VectorXd w = z - alpha * t_;
  const double r = std::sqrt(std::max(0.0, -w.dot(m_ * w)));
  if (r <= alpha) return z;
  if (r <= -alpha) return VectorXd::Zero(z.size());
  return 0.5 * (alpha + r) * (t_ + w / r);
}

// Base norm in doubles with a subgradient.
class NormEval {
 public:
  NormEval(const BaseNorm& n, std::size_t dim) : kind_(n.kind), dim_(dim) {
    if (kind_ == BaseNormKind::kWick) {
      if (!n.frame) throw Error(Errc::kInvalidArgument, "Wick base norm needs a frame");
      const MatrixXd m = metric_matrix(n.frame->form());
      const VectorXd mt = m * to_eigen(n.frame->t());
      w_ = 2 * mt * mt.transpose() - m;
      if (static_cast<std::size_t>(w_.rows()) != dim) {
        throw Error(Errc::kDimensionMismatch, "Wick frame dimension");
      }
    }
  }

  double operator()(const VectorXd& z) const {
    switch (kind_) {
      case BaseNormKind::kWick:
        return std::sqrt(std::max(0.0, z.dot(w_ * z)));
      case BaseNormKind::kL1:
        return z.lpNorm<1>();
      case BaseNormKind::kL2:
        return z.norm();
      case BaseNormKind::kLinf:
        return z.size() ? z.lpNorm<Eigen::Infinity>() : 0.0;
    }
    return 0;
  }

  VectorXd subgradient(const VectorXd& z) const {
    VectorXd g = VectorXd::Zero(z.size());
    switch (kind_) {
      case BaseNormKind::kWick: {
        const double n = (*this)(z);
        if (n > 0) g = w_ * z / n;
        break;
      }
      case BaseNormKind::kL1:
        for (Eigen::Index i = 0; i < z.size(); ++i) g(i) = (z(i) > 0) - (z(i) < 0);
        break;
      case BaseNormKind::kL2: {
        const double n = z.norm();
        if (n > 0) g = z / n;
        break;
      }
      case BaseNormKind::kLinf: {
        Eigen::Index k = 0;
        if (z.size() && z.cwiseAbs().maxCoeff(&k) > 0) g(k) = z(k) > 0 ? 1 : -1;
        break;
      }
    }
    return g;
  }

  // c with |z|_2 <= n(z) / c.
  double lower_constant() const {
    switch (kind_) {
      case BaseNormKind::kWick: {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(w_, Eigen::EigenvaluesOnly);
        return std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
      }
      case BaseNormKind::kLinf:
        return 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(dim_, 1)));
      default:
        return 1.0;
    }
  }

  // Metric for the projected subgradient method.
  const MatrixXd& wick_matrix() const { return w_; }

 private:
  BaseNormKind kind_;
  std::size_t dim_;
  MatrixXd w_;
};

MatrixXd generator_matrix(const Cone& c) {
  auto* p = c.as<PolyhedralCone>();
  if (!p) return {};
  MatrixXd g(static_cast<Eigen::Index>(p->dim), static_cast<Eigen::Index>(p->generators.size()));
  for (std::size_t j = 0; j < p->generators.size(); ++j) {
    g.col(static_cast<Eigen::Index>(j)) = to_eigen(p->generators[j]);
  }
  return g;
}

struct Setup {
  Cone cone;
  ConeOracle oracle;
  NormEval norm;
  Vector x_exact;
  VectorXd x;
  FeasibleSplit start;
  double upper = 0;
  double radius = 0;  // |u*|_2 <= radius for every minimizer
};

Setup make_setup(const ExtensionProblem& p) {
  if (p.x.dim() != p.cone.ambient_dim()) throw Error(Errc::kDimensionMismatch, "target dimension");
  Cone cone = normalize_cone(p.cone);
  ConeOracle oracle(cone);
  NormEval norm(p.base, p.x.dim());
  Vector xe = to_exact(p.x);
  FeasibleSplit start = feasible_split(cone, xe);
  const double upper = norm(to_eigen(start.u)) + norm(to_eigen(start.v));
  const double c = norm.lower_constant();
  if (!(c > 0)) throw Error(Errc::kInvalidArgument, "base norm is not positive definite");
  const double radius = upper / c * (1 + 1e-9) + 1e-300;
  return Setup{std::move(cone), std::move(oracle), std::move(norm), xe, to_eigen(xe),
               std::move(start), upper, radius};
}

ExtensionResult finish(const Setup& s, const VectorXd& u, double value, ExtensionResult r) {
  r.value = value;
  r.u = from_eigen(u);
  r.v = from_eigen(u - s.x);
  return r;
}

ExtensionResult start_result(const Setup& s, const char* solver) {
  ExtensionResult r;
  r.value = s.upper;
  r.u = s.start.u;
  r.v = s.start.v;
  r.solver = solver;
  r.lower_bound = std::numeric_limits<double>::quiet_NaN();
  return r;
}

ExtensionResult solve_ellipsoid(const ExtensionProblem& p, const Setup& s) {
  ExtensionResult r = start_result(s, "ellipsoid");
  if (s.upper == 0) {
    r.lower_bound = 0;
    r.converged = true;
    return r;
  }
  const auto d = static_cast<Eigen::Index>(s.x.size());
  const double dd = static_cast<double>(d);
  auto objective = [&](const VectorXd& u) { return s.norm(u) + s.norm(u - s.x); };

  VectorXd best_u = to_eigen(s.start.u);
  double best = objective(best_u);
  double lb = 0;  // norms are nonnegative
  VectorXd c = VectorXd::Zero(d);
  MatrixXd pm = MatrixXd::Identity(d, d) * (s.radius * s.radius);
  double r1 = s.radius;  // 1-D half-width

  std::size_t k = 0;
  for (; k < p.solver.max_iters; ++k) {
    VectorXd g;
    bool objective_cut = false;
    if (auto a = s.oracle.cut(c)) {
      g = -*a;
    } else if (auto a2 = s.oracle.cut(c - s.x)) {
      g = -*a2;
    } else {
      const double f = objective(c);
      if (f < best) {
        best = f;
        best_u = c;
      }
      g = s.norm.subgradient(c) + s.norm.subgradient(c - s.x);
      objective_cut = true;
    }
    const double gpg = d == 1 ? g(0) * g(0) * r1 * r1 : g.dot(pm * g);
    if (objective_cut) {
      if (!(gpg > 0)) {
        // Zero subgradient: c minimizes the objective outright.
        lb = best;
        r.converged = true;
        break;
      }
      lb = std::max(lb, objective(c) - std::sqrt(gpg));
      if (best - lb <= p.solver.tol * std::max(1.0, best)) {
        r.converged = true;
        break;
      }
    }
    if (!(gpg > 0) || !std::isfinite(gpg)) break;
    if (d == 1) {
      c(0) -= (g(0) > 0 ? 1 : -1) * r1 / 2;
      r1 /= 2;
      continue;
    }
    const VectorXd gt = pm * g / std::sqrt(gpg);
    c -= gt / (dd + 1);
    pm = dd * dd / (dd * dd - 1) * (pm - 2 / (dd + 1) * gt * gt.transpose());
    pm = 0.5 * (pm + pm.transpose()).eval();
  }
  r.iterations = k;
  r.lower_bound = lb;
  if (best < s.upper) return finish(s, best_u, best, r);
  r.value = s.upper;
  return r;
}

ExtensionResult solve_subgradient(const ExtensionProblem& p, const Setup& s) {
  ExtensionResult r = start_result(s, "projected_subgradient");
  if (s.upper == 0) {
    r.converged = true;
    return r;
  }
  const auto d = s.x.size();
  const MatrixXd gens = generator_matrix(s.cone);
  // Metric of the projections: identity, or the Wick metric of t.
  MatrixXd h = MatrixXd::Identity(d, d);
  if (s.oracle.future()) h = 2 * s.oracle.mt() * s.oracle.mt().transpose() - s.oracle.metric();
  const MatrixXd hinv = h.inverse();
  auto objective = [&](const VectorXd& u) { return s.norm(u) + s.norm(u - s.x); };

  // Dykstra's alternating projections onto F and x + F.
  auto project = [&](const VectorXd& z) {
    VectorXd y = z, pa = VectorXd::Zero(d), pb = VectorXd::Zero(d);
    for (int it = 0; it < 200; ++it) {
      const VectorXd a = s.oracle.project(y + pa, gens);
      pa = y + pa - a;
      const VectorXd b = s.x + s.oracle.project(a + pb - s.x, gens);
      pb = a + pb - b;
      const double change = (b - y).norm();
      y = b;
      if (change <= 1e-14 * (1 + y.norm())) break;
    }
    return y;
  };

  VectorXd u = to_eigen(s.start.u);
  VectorXd best_u = u;
  double best = objective(u);
  const double scale = p.solver.step_scale * s.radius;
  const double slack = 1e-9 * (1 + s.radius);
  std::size_t k = 0;
  for (; k < p.solver.max_iters; ++k) {
    VectorXd g = s.norm.subgradient(u) + s.norm.subgradient(u - s.x);
    VectorXd dir = hinv * g;
    const double gn = std::sqrt(std::max(0.0, g.dot(dir)));
    if (!(gn > 0)) {
      r.converged = true;
      break;
    }
    u = project(u - scale / std::sqrt(static_cast<double>(k + 1)) * dir / gn);
    if (s.oracle.margin(u) >= -slack && s.oracle.margin(u - s.x) >= -slack) {
      const double f = objective(u);
      if (f < best) {
        best = f;
        best_u = u;
      }
    }
  }
  r.iterations = k;
  if (best < s.upper) return finish(s, best_u, best, r);
  return r;
}

double oracle_value(const ExtensionProblem& p, const Setup& s) {
  const std::size_t d = s.x.size();
  if (d > 3) throw Error(Errc::kDimTooLarge, "grid oracle supports ambient dimension <= 3");
  const std::size_t res = p.solver.resolution;
  if (res < 2 || res > 401) throw Error(Errc::kInvalidArgument, "grid resolution must lie in [2, 401]");
  if (s.upper == 0) return 0;
  auto objective = [&](const VectorXd& u) { return s.norm(u) + s.norm(u - s.x); };
  auto exact_member = [&](const VectorXd& u) {
    const Vector ue = to_exact(from_eigen(u));
    return contains(s.cone, ue) && contains(s.cone, ue - s.x_exact);
  };

  double best = s.upper;
  VectorXd best_u = to_eigen(s.start.u);
  VectorXd center = VectorXd::Zero(static_cast<Eigen::Index>(d));
  double half = s.radius;
  const double filter = -1e-12 * (1 + s.radius);
  for (std::size_t round = 0; round <= p.solver.refine_rounds; ++round) {
    const double step = 2 * half / static_cast<double>(res - 1);
    std::vector<std::size_t> idx(d, 0);
    VectorXd u(static_cast<Eigen::Index>(d));
    for (;;) {
      for (std::size_t i = 0; i < d; ++i) {
        u(static_cast<Eigen::Index>(i)) =
            center(static_cast<Eigen::Index>(i)) - half + step * static_cast<double>(idx[i]);
      }
      if (s.oracle.margin(u) >= filter && s.oracle.margin(u - s.x) >= filter) {
        const double f = objective(u);
        if (f < best && exact_member(u)) {
          best = f;
          best_u = u;
        }
      }
      std::size_t i = 0;
      while (i < d && ++idx[i] == res) idx[i++] = 0;
      if (i == d) break;
    }
    center = best_u;
    half = 8 * step;
  }
  return best;
}

}  // namespace

double base_norm_eval(const BaseNorm& n, const Vector& x) {
  return NormEval(n, x.dim())(to_eigen(x));
}

FeasibleSplit feasible_split(const Cone& c, const Vector& x_in) {
  const Vector x = to_exact(x_in);
  const Vector zero = Vector::zeros(x.dim());
  if (contains(c, x)) return {x, zero};
  if (contains(c, -x)) return {zero, -x};
  if (auto* p = c.as<PolyhedralCone>()) {
    std::vector<Vector> cols = p->generators;
    for (const auto& g : p->generators) cols.push_back(-g);
    auto theta = find_nonnegative_solution(Matrix::from_columns(cols), x);
    if (!theta) throw Error(Errc::kInfeasible, x.to_string() + " is not in F - F");
    Vector u = zero, v = zero;
    const std::size_t m = p->generators.size();
    for (std::size_t j = 0; j < m; ++j) {
      u += p->generators[j] * Scalar((*theta)[j]);
      v += p->generators[j] * Scalar((*theta)[m + j]);
    }
    return {u, v};
  }
  if (auto* f = c.as<FutureCone>()) {
    // lambda t +- x/2 is future causal for lambda large enough.
    const Vector t = to_exact(f->t);
    const Vector half = x * Scalar::exact(1, 2);
    auto ok = [&](const Rational& lam) {
      const Vector lt = t * Scalar(lam);
      return contains(c, lt + half) && contains(c, lt - half);
    };
    Rational hi = 1;
    for (int i = 0; i < 200 && !ok(hi); ++i) hi *= 2;
    if (!ok(hi)) throw Error(Errc::kInfeasible, x.to_string() + " is not in F - F");
    Rational lo = 0;
    for (int i = 0; i < 24; ++i) {
      Rational mid = (lo + hi) / 2;
      (ok(mid) ? hi : lo) = mid;
    }
    const Vector lt = t * Scalar(hi);
    return {lt + half, lt - half};
  }
  return feasible_split(normalize_cone(c), x);
}

ExtensionResult extended_norm(const ExtensionProblem& p) {
  const Setup s = make_setup(p);
  switch (p.solver.kind) {
    case SolverKind::kEllipsoid:
      return solve_ellipsoid(p, s);
    case SolverKind::kProjectedSubgradient:
      return solve_subgradient(p, s);
    case SolverKind::kGridOracle: {
      ExtensionResult r = start_result(s, "grid_oracle");
      r.value = oracle_value(p, s);
      r.converged = true;
      return r;
    }
  }
  throw Error(Errc::kInvalidArgument, "unknown solver");
}

double grid_oracle(const ExtensionProblem& p) { return oracle_value(p, make_setup(p)); }

double equivalence_constant(const Cone& c, const BaseNorm& n, const Vector& s, const Scalar& delta,
                            std::size_t samples, std::uint64_t seed) {
  if (delta.sign() <= 0) throw Error(Errc::kInvalidArgument, "delta must be positive");
  const std::size_t d = s.dim();
  if (d != c.ambient_dim()) throw Error(Errc::kDimensionMismatch, "center dimension");
  const NormEval norm(n, d);
  const VectorXd center = to_eigen(s);
  const double dl = delta.to_double();
  Rng rng(seed);
  for (std::size_t k = 0; k < samples + 2 * d; ++k) {
    VectorXd dir = VectorXd::Zero(static_cast<Eigen::Index>(d));
    if (k < 2 * d) {
      dir(static_cast<Eigen::Index>(k / 2)) = k % 2 ? -1 : 1;
    } else {
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = rng.normal();
    }
    const double nd = norm(dir);
    if (!(nd > 0)) continue;
    const Vector z = to_exact(from_eigen(center + dl / nd * dir));
    if (!contains(c, z)) {
      throw Error(Errc::kBallNotContained, "ball point " + from_eigen(center + dl / nd * dir).to_string() +
                                               " lies outside the cone");
    }
  }
  return 2 * norm(center) / dl + 1;
}

}  // namespace conekit
