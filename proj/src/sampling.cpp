#include "conekit/sampling.hpp"

#include <cmath>
#include <numbers>

namespace conekit {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::kInvalidArgument, "empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform01();
  while (u1 <= 0) u1 = uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rational Rng::rational(std::int64_t bound, std::int64_t max_den) {
  Rational q(static_cast<long>(uniform_int(-bound, bound)),
             static_cast<unsigned long>(uniform_int(1, max_den)));
  q.canonicalize();
  return q;
}

Rational Rng::nonneg_rational(std::int64_t bound, std::int64_t max_den) {
  Rational q(static_cast<long>(uniform_int(0, bound)),
             static_cast<unsigned long>(uniform_int(1, max_den)));
  q.canonicalize();
  return q;
}

Vector random_rational_vector(std::size_t dim, Rng& rng, const SampleOptions& opt) {
  std::vector<Scalar> c;
  c.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) c.emplace_back(rng.rational(opt.bound, opt.max_den));
  return Vector(std::move(c));
}

Vector random_null_vector(std::size_t spatial_dim, Rng& rng, const SampleOptions& opt) {
  // (1 + |s|^2, 2 s, 1 - |s|^2) is null for s in Q^{n-1}.
  if (spatial_dim == 0) return Vector::zeros(1);
  Rational scale = rng.nonneg_rational(opt.bound, opt.max_den);
  std::vector<Scalar> c(spatial_dim + 1, Scalar(0));
  if (spatial_dim == 1) {
    c[0] = Scalar(scale);
    c[1] = Scalar(rng.coin() ? scale : Rational(-scale));
    return Vector(std::move(c));
  }
  std::vector<Rational> s(spatial_dim - 1);
  Rational s2 = 0;
  for (auto& x : s) {
    x = rng.rational(opt.bound, opt.max_den);
    s2 += x * x;
  }
  const auto last = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(spatial_dim)));
  c[0] = Scalar(Rational(scale * (1 + s2)));
  std::size_t k = 0;
  for (std::size_t i = 1; i <= spatial_dim; ++i) {
    if (i == last) {
      c[i] = Scalar(Rational(scale * (1 - s2)));
    } else {
      c[i] = Scalar(Rational(scale * 2 * s[k++]));
    }
  }
  return Vector(std::move(c));
}

namespace {

bool is_standard_minkowski(const GramForm& g) {
  const std::size_t n = g.dim();
  if (!g.full_rank() || g.backend() != Backend::kExact) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(g.basis()[i] == Vector::unit(n, i))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const int expected = i != j ? 0 : (i == 0 ? 1 : -1);
      if (!(g.gram()(i, j) == Scalar(expected))) return false;
    }
  }
  return true;
}

}  // namespace

Vector sample_future_causal(const GramForm& g, const Vector& t, const Scalar& radius, Rng& rng) {
  const std::size_t n = g.ambient_dim();
  const Rational tt = g.quad(t).rational();
  const Rational r = radius.to_backend(Backend::kExact).rational();
  // Rational a in [0, radius] on a 2^-16 grid.
  const auto steps = static_cast<std::int64_t>(1) << 16;
  Rational a = r * Rational(static_cast<long>(rng.uniform_int(0, steps)), static_cast<unsigned long>(steps));
  a.canonicalize();

  Vector u = random_rational_vector(n, rng);
  Vector w = u - t * Scalar(Rational(g.inner(u, t).rational() / tt));
  const Rational q = -g.quad(w).rational();  // Wick norm squared of w, >= 0
  if (sgn(q) <= 0 || sgn(a) == 0) return t * Scalar(Rational(a / sqrt_upper(tt)));

  // v = a t + s w with s^2 q <= a^2 <t,t> rho^2, rho in [0,1].
  Rational rho(static_cast<long>(rng.uniform_int(0, steps)), static_cast<unsigned long>(steps));
  rho.canonicalize();
  Rational s = a * sqrt_lower(tt) * rho / sqrt_upper(q);
  return t * Scalar(a) + w * Scalar(s);
}

Vector random_cone_point(const Cone& c, Rng& rng, const SampleOptions& opt) {
  if (auto* p = c.as<PolyhedralCone>()) {
    Vector x = Vector::zeros(p->dim);
    for (const auto& g : p->generators) {
      if (rng.coin(opt.boundary_prob)) continue;
      x += g * Scalar(rng.nonneg_rational(opt.bound, opt.max_den));
    }
    return x;
  }
  if (auto* p = c.as<PCone>()) {
    if (p->p == 2 && rng.coin(opt.boundary_prob)) return random_null_vector(p->spatial_dim, rng, opt);
    std::vector<Scalar> coords(p->spatial_dim + 1, Scalar(0));
    Rational norm = 0;
    double sum_p = 0;
    for (std::size_t i = 1; i <= p->spatial_dim; ++i) {
      Rational x = rng.rational(opt.bound, opt.max_den);
      coords[i] = Scalar(x);
      Rational ax = abs(x);
      if (p->p == 1) {
        norm += ax;
      } else if (p->p == 2) {
        norm += x * x;
      } else if (std::isinf(p->p)) {
        norm = std::max(norm, ax);
      } else {
        sum_p += std::pow(ax.get_d(), p->p);
      }
    }
    Rational x0;
    if (p->p == 1 || std::isinf(p->p)) {
      x0 = norm;
    } else if (p->p == 2) {
      x0 = sqrt_upper(norm);
    } else {
      double v = std::pow(sum_p, 1.0 / p->p);
      x0 = ceil_dyadic(v * (1 + 1e-12) + 1e-12, 30);
    }
    if (!rng.coin(opt.boundary_prob)) x0 += rng.nonneg_rational(opt.bound, opt.max_den);
    coords[0] = Scalar(x0);
    return Vector(std::move(coords));
  }
  if (auto* f = c.as<FutureCone>()) {
    if (is_standard_minkowski(f->form) && f->t == Vector::unit(f->form.ambient_dim(), 0) &&
        rng.coin(opt.boundary_prob)) {
      return random_null_vector(f->form.ambient_dim() - 1, rng, opt);
    }
    return sample_future_causal(f->form, f->t, Scalar(static_cast<long>(opt.bound)), rng);
  }
  const auto& o = *c.as<Orthant>();
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < o.dim; ++i) {
    coords.emplace_back(rng.coin(opt.boundary_prob) ? Rational(0)
                                                    : rng.nonneg_rational(opt.bound, opt.max_den));
  }
  return Vector(std::move(coords));
}

LorentzFrame random_lorentz_frame(std::size_t spatial_dim, Rng& rng) {
  const std::size_t n = spatial_dim + 1;
  // L = U * Lo with unit triangular factors.
  Matrix up = Matrix::identity(n), lo = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      up(i, j) = Scalar(rng.rational(2, 2));
      lo(j, i) = Scalar(rng.rational(2, 2));
    }
  }
  const Matrix l = up * lo;
  std::vector<Scalar> diag(n, Scalar(-1));
  diag[0] = Scalar(1);
  const Matrix j = SymMatrix::diagonal(diag).matrix();
  const SymMatrix metric(l.transpose() * j * l);
  const Vector t = *solve(l, Vector::unit(n, 0));
  return LorentzFrame(GramForm::standard(metric), t);
}

}  // namespace conekit
