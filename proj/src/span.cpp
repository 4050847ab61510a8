#include "conekit/span.hpp"

#include <cmath>

namespace conekit {

FormalDifference::FormalDifference(Vector pos, Vector neg, Cone c)
    : pos_(std::move(pos)), neg_(std::move(neg)), cone_(std::move(c)) {
  require_same_dim(pos_, neg_, "formal difference");
  for (const Vector* v : {&pos_, &neg_}) {
    if (!contains(cone_, *v)) throw Error(Errc::kNotMember, v->to_string() + " is not in the cone");
  }
}

std::string FormalDifference::to_string() const { return pos_.to_string() + " - " + neg_.to_string(); }

FormalDifference embed(const Vector& x, const Cone& c) {
  return FormalDifference(x, Vector::zeros(x.dim(), x.backend()), c);
}

bool equiv(const FormalDifference& a, const FormalDifference& b, const ToleranceContext& ctx) {
  if (!(a.cone() == b.cone())) throw Error(Errc::kConeMismatch, "formal differences over different cones");
  const Vector lhs = a.pos() + b.neg();
  const Vector rhs = b.pos() + a.neg();
  if (lhs.is_exact() && rhs.is_exact()) return lhs == rhs;
  for (std::size_t i = 0; i < lhs.dim(); ++i) {
    if (!approx_eq(lhs[i].to_double(), rhs[i].to_double(), ctx)) return false;
  }
  return true;
}

Vector extend_linear(const ConeMap& f, const FormalDifference& d) {
  Vector a = f(d.pos());
  Vector b = f(d.neg());
  require_same_dim(a, b, "extend_linear");
  return a - b;
}

FormalDifference canonicalize(const FormalDifference& d) {
  if (!d.cone().as<Orthant>()) {
    throw Error(Errc::kUnsupportedRepresentation, "canonicalize needs an orthant");
  }
  std::vector<Scalar> p, n;
  for (std::size_t i = 0; i < d.pos().dim(); ++i) {
    const Scalar m = d.pos()[i] < d.neg()[i] ? d.pos()[i] : d.neg()[i];
    p.push_back(d.pos()[i] - m);
    n.push_back(d.neg()[i] - m);
  }
  return FormalDifference(Vector(std::move(p)), Vector(std::move(n)), d.cone());
}

bool future_split_holds(const Vector& x, const LorentzFrame& frame, const Rational& lambda) {
  const Vector half = x * Scalar::exact(1, 2);
  const Vector lt = frame.t() * Scalar(lambda);
  const GramForm& g = frame.form();
  for (const Vector& v : {lt + half, lt - half}) {
    if (g.quad(v).sign() < 0 || g.inner(v, frame.t()).sign() < 0) return false;
  }
  return true;
}

FutureSplit future_decompose(const Vector& x, const LorentzFrame& frame) {
  if (!x.is_exact() || !frame.t().is_exact() || frame.form().backend() != Backend::kExact) {
    throw Error(Errc::kExactBackend, "future_decompose works on rational data");
  }
  // Constraints: lambda >= |alpha|/2 and lambda^2 -+ lambda alpha + <x,x>/4 >= 0.
  // With <x,x> = alpha^2 - n(w)^2 the larger root is (|alpha| + n(w))/2.
  const Decomposition d = decompose(frame, x);
  const Rational alpha = abs(d.alpha.rational());
  const Rational nw2 = -frame.form().quad(d.w).rational();
  FutureSplit s;
  s.lambda_exact = is_rational_square(nw2);
  s.lambda = (alpha + sqrt_upper(nw2)) / 2;
  s.lambda.canonicalize();
  s.lambda_star = 0.5 * (alpha.get_d() + std::sqrt(std::max(0.0, nw2.get_d())));
  const Vector half = x * Scalar::exact(1, 2);
  const Vector lt = frame.t() * Scalar(s.lambda);
  s.v1 = lt + half;
  s.v2 = lt - half;
  if (!future_split_holds(x, frame, s.lambda) || !(s.v1 - s.v2 == x)) {
    throw Error(Errc::kPreconditionFailed, "future decomposition post-check failed for " + x.to_string());
  }
  return s;
}

}  // namespace conekit
