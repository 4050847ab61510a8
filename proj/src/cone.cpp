#include "conekit/cone.hpp"

#include <algorithm>
#include <cmath>

#include "conekit/lorentz.hpp"
#include "conekit/lp.hpp"
#include "conekit/sampling.hpp"

namespace conekit {

Cone Cone::polyhedral(std::vector<Vector> generators) {
  if (generators.empty()) throw Error(Errc::kInvalidArgument, "polyhedral cone needs generators");
  const std::size_t dim = generators.front().dim();
  for (auto& g : generators) {
    if (g.dim() != dim) throw Error(Errc::kDimensionMismatch, "generators differ in dimension");
    g = g.to_backend(Backend::kExact);
  }
  return Cone(PolyhedralCone{std::move(generators), dim});
}

Cone Cone::p_cone(double p, std::size_t spatial_dim) {
  if (!(p >= 1)) throw Error(Errc::kInvalidArgument, "p-cone needs p >= 1");
  return Cone(PCone{p, spatial_dim});
}

Cone Cone::future(GramForm form, Vector t) {
  if (!form.full_rank()) {
    throw Error(Errc::kInvalidArgument, "future cone form must be defined on the ambient space");
  }
  if (form.quad(t).sign() <= 0) throw Error(Errc::kInvalidArgument, "future cone needs <t,t> > 0");
  return Cone(FutureCone{std::move(form), std::move(t)});
}

Cone Cone::minkowski_future(std::size_t spatial_dim) {
  return future(GramForm::minkowski(spatial_dim), Vector::unit(spatial_dim + 1, 0));
}

Cone Cone::orthant(std::size_t dim) { return Cone(Orthant{dim}); }

std::size_t Cone::ambient_dim() const {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PolyhedralCone>) return r.dim;
        if constexpr (std::is_same_v<T, PCone>) return r.spatial_dim + 1;
        if constexpr (std::is_same_v<T, FutureCone>) return r.form.ambient_dim();
        if constexpr (std::is_same_v<T, Orthant>) return r.dim;
      },
      rep_);
}

std::string Cone::kind() const {
  static const char* names[] = {"polyhedral", "pcone", "future", "orthant"};
  return names[rep_.index()];
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (auto* p = a.as<PolyhedralCone>()) return p->generators == b.as<PolyhedralCone>()->generators;
  if (auto* p = a.as<PCone>()) {
    return p->p == b.as<PCone>()->p && p->spatial_dim == b.as<PCone>()->spatial_dim;
  }
  if (auto* f = a.as<FutureCone>()) return f->form == b.as<FutureCone>()->form && f->t == b.as<FutureCone>()->t;
  return a.as<Orthant>()->dim == b.as<Orthant>()->dim;
}

namespace {

void check_dim(const Cone& c, const Vector& x, const char* where) {
  if (x.dim() != c.ambient_dim()) {
    throw Error(Errc::kDimensionMismatch, std::string(where) + ": vector of dimension " +
                                              std::to_string(x.dim()) + " for a cone in R^" +
                                              std::to_string(c.ambient_dim()));
  }
}

bool polyhedral_contains(const PolyhedralCone& c, const Vector& x) {
  if (x.is_zero()) return true;
  return find_nonnegative_solution(Matrix::from_columns(c.generators), x).has_value();
}

// sign(x0 - |x|_p), exact for p in {1, 2, inf}.
int pcone_margin_sign(const PCone& c, const Vector& x) {
  const Scalar zero = Scalar(0).to_backend(x.backend());
  if (c.p == 1) {
    Scalar s = x[0];
    for (std::size_t i = 1; i < x.dim(); ++i) s -= x[i].abs();
    return s.sign();
  }
  if (std::isinf(c.p)) {
    Scalar m = zero;
    for (std::size_t i = 1; i < x.dim(); ++i) m = std::max(m, x[i].abs());
    return (x[0] - m).sign();
  }
  if (c.p == 2) {
    Scalar s = zero;
    for (std::size_t i = 1; i < x.dim(); ++i) s += x[i] * x[i];
    if (x[0].sign() < 0) return -1;
    int sq = (x[0] * x[0] - s).sign();
    if (x[0].sign() == 0) return sq == 0 ? 0 : -1;
    return sq;
  }
  double s = 0;
  for (std::size_t i = 1; i < x.dim(); ++i) s += std::pow(std::fabs(x[i].to_double()), c.p);
  double d = x[0].to_double() - std::pow(s, 1.0 / c.p);
  return (d > 0) - (d < 0);
}

bool orthant_contains(const Vector& x, bool strict) {
  for (const auto& s : x.coords()) {
    if (strict ? s.sign() <= 0 : s.sign() < 0) return false;
  }
  return true;
}

}  // namespace

bool contains(const Cone& c, const Vector& x) {
  check_dim(c, x, "contains");
  if (auto* p = c.as<PolyhedralCone>()) return polyhedral_contains(*p, x);
  if (auto* p = c.as<PCone>()) return pcone_margin_sign(*p, x) >= 0;
  if (auto* f = c.as<FutureCone>()) {
    return f->form.quad(x).sign() >= 0 && f->form.inner(x, f->t).sign() >= 0;
  }
  return orthant_contains(x, false);
}

ProperResult is_proper(const Cone& c) {
  if (auto* p = c.as<PolyhedralCone>()) {
    // If v != 0 lies in F and -F, some generator g with positive weight in v
    // has -g in F as well.
    for (const auto& g : p->generators) {
      if (g.is_zero()) continue;
      if (polyhedral_contains(*p, -g)) return {false, g};
    }
    return {true, std::nullopt};
  }
  if (auto* f = c.as<FutureCone>()) {
    if (classify(f->form).kind != SignatureKind::kLorentzian) {
      throw Error(Errc::kNotLorentzian, "future cone over a non-Lorentzian form");
    }
  }
  return {true, std::nullopt};
}

bool leq(const Vector& x, const Vector& y, const Cone& c) {
  require_same_dim(x, y, "leq");
  return contains(c, y - x);
}

CoreResult in_core(const Cone& c, const Vector& x) {
  if (!contains(c, x)) throw Error(Errc::kNotMember, "in_core: " + x.to_string() + " is not in the cone");
  CoreResult r;
  r.method = "strict";
  if (auto* p = c.as<PCone>()) {
    r.in_core = pcone_margin_sign(*p, x) > 0;
  } else if (auto* f = c.as<FutureCone>()) {
    r.in_core = f->form.quad(x).sign() > 0 && f->form.inner(x, f->t).sign() > 0;
  } else if (c.as<Orthant>()) {
    r.in_core = orthant_contains(x, true);
  } else {
    const auto& poly = *c.as<PolyhedralCone>();
    r.method = "algebraic";
    const Vector xe = x.to_backend(Backend::kExact);
    Matrix g = Matrix::from_columns(poly.generators);
    std::vector<Vector> dirs;
    for (auto j : independent_columns(g)) {
      dirs.push_back(poly.generators[j]);
      dirs.push_back(-poly.generators[j]);
    }
    // x + eps d in F is monotone in eps, so halving finds the largest
    // admissible dyadic step per direction.
    constexpr int kMaxHalvings = 20;
    int worst = 0;
    for (const auto& d : dirs) {
      Rational eps = 1;
      int k = 0;
      while (!polyhedral_contains(poly, xe + d * Scalar(eps))) {
        if (++k > kMaxHalvings) {
          r.in_core = false;
          return r;
        }
        eps /= 2;
      }
      worst = std::max(worst, k);
    }
    r.in_core = !dirs.empty();
    Rational eps(1, Integer(1) << worst);
    eps.canonicalize();
    r.epsilon = eps;
  }
  return r;
}

bool dual_contains(const Cone& c, const GramForm& g, const Vector& v) {
  if (g.quad(v).sign() < 0) throw Error(Errc::kNotCausal, "dual_contains: <v,v> < 0 for " + v.to_string());
  if (auto* p = c.as<PolyhedralCone>()) {
    for (const auto& gen : p->generators) {
      if (g.inner(v, gen).sign() < 0) return false;
    }
    return true;
  }
  if (auto* f = c.as<FutureCone>()) {
    // Self-dual by reverse Cauchy-Schwarz: F* = C_t^+.
    return g.inner(v, f->t).sign() >= 0;
  }
  throw Error(Errc::kUnsupportedRepresentation, "dual_contains needs a polyhedral or future cone");
}

SelfDualityReport self_duality_report(const Cone& c, const GramForm& g, std::size_t samples,
                                      std::uint64_t seed, const Scalar& radius) {
  SelfDualityReport rep;
  if (classify(g).kind != SignatureKind::kLorentzian) {
    rep.holds = rep.forward_holds = rep.backward_holds = false;
    rep.detail = "form is not Lorentzian";
    return rep;
  }

  std::optional<Vector> reference;
  if (auto* p = c.as<PolyhedralCone>()) {
    // F subset F*: every generator causal and pairwise nonnegative; the
    // bilinear expansion then covers all nonnegative combinations.
    for (std::size_t i = 0; i < p->generators.size() && rep.forward_holds; ++i) {
      for (std::size_t j = i; j < p->generators.size(); ++j) {
        if (g.inner(p->generators[i], p->generators[j]).sign() < 0) {
          rep.forward_holds = false;
          rep.witness = p->generators[i];
          rep.detail = "generator pair with negative inner product";
          break;
        }
      }
    }
    Vector sum = Vector::zeros(p->dim);
    for (const auto& gen : p->generators) sum += gen;
    if (g.quad(sum).sign() > 0) {
      reference = sum;
    } else {
      for (const auto& gen : p->generators) {
        if (g.quad(gen).sign() > 0) {
          reference = gen;
          break;
        }
      }
    }
  } else if (auto* f = c.as<FutureCone>()) {
    reference = f->t;
  } else {
    throw Error(Errc::kUnsupportedRepresentation, "self-duality needs a polyhedral or future cone");
  }

  if (!rep.forward_holds) {
    rep.holds = false;
    return rep;
  }
  if (!reference) {
    rep.holds = rep.backward_holds = false;
    rep.detail = "cone has no timelike element to orient causal samples";
    return rep;
  }

  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Vector v = sample_future_causal(g, *reference, radius, rng);
    ++rep.samples;
    bool in_f = contains(c, v);
    bool in_dual = dual_contains(c, g, v);
    if (in_f && !in_dual) {
      rep.forward_holds = false;
      rep.witness = v;
      rep.detail = "sample in F but not in F*";
      break;
    }
    if (in_dual && !in_f) {
      rep.backward_holds = false;
      rep.witness = v;
      rep.detail = "sample in F* but not in F";
      break;
    }
  }
  rep.holds = rep.forward_holds && rep.backward_holds;
  return rep;
}

std::vector<Vector> polyhedral_facets(const PolyhedralCone& c) {
  const std::size_t n = c.dim;
  std::vector<Vector> gens;
  for (const auto& g : c.generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty() || rank(Matrix::from_columns(gens)) != n) {
    throw Error(Errc::kUnsupportedRepresentation, "facets need a full-dimensional cone");
  }

  auto canonical = [](Vector a) {
    for (const auto& s : a.coords()) {
      if (!s.is_zero()) return a * (Scalar(1) / s.abs());
    }
    return a;
  };

  std::vector<Vector> facets;
  auto consider = [&](const Vector& normal) {
    int pos = 0, neg = 0;
    for (const auto& g : gens) {
      int s = dot(normal, g).sign();
      pos += s > 0;
      neg += s < 0;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    Vector a = canonical(neg ? -normal : normal);
    if (std::find(facets.begin(), facets.end(), a) == facets.end()) facets.push_back(a);
  };

  if (n == 1) {
    consider(Vector{Scalar(1)});
    return facets;
  }
  // Enumerate (n-1)-subsets of generators spanning a hyperplane.
  std::vector<std::size_t> idx(n - 1);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (gens.size() < n - 1) return facets;
  for (;;) {
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(gens[i]);
    auto ns = null_space(Matrix::from_rows(rows));
    if (ns.size() == 1) consider(ns.front());
    // next combination
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == gens.size() - (idx.size() - (k - 1))) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  return facets;
}

}  // namespace conekit
