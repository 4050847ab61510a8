#include "conekit/order.hpp"

#include <algorithm>

namespace conekit {

std::vector<Vector> generate(const SequenceRule& rule) {
  if (auto* e = std::get_if<ExplicitRule>(&rule)) return e->terms;
  std::vector<Vector> out;
  if (auto* a = std::get_if<AffineRule>(&rule)) {
    require_same_dim(a->start, a->step, "affine rule");
    Vector v = a->start;
    for (std::size_t k = 0; k < a->n; ++k) {
      out.push_back(v);
      v += a->step;
    }
    return out;
  }
  const auto& g = std::get<GeometricRule>(rule);
  const Vector start = g.start ? *g.start : Vector::zeros(g.target.dim(), g.target.backend());
  require_same_dim(start, g.target, "geometric rule");
  const Vector gap = start - g.target;
  Rational r = 1;
  for (std::size_t k = 0; k < g.n; ++k) {
    out.push_back(g.target + gap * Scalar(r).to_backend(gap.backend()));
    r *= g.ratio;
  }
  return out;
}

OrderedSequence reversed(const OrderedSequence& s) {
  OrderedSequence r = s;
  for (auto& v : r.terms) v = -v;
  return r;
}

OrderCheck is_nondecreasing(const OrderedSequence& s) {
  for (std::size_t k = 0; k + 1 < s.terms.size(); ++k) {
    if (!leq(s.terms[k], s.terms[k + 1], s.cone)) return {false, k};
  }
  return {};
}

OrderCheck is_bounded_above(const OrderedSequence& s, const Vector& y) {
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    if (!leq(s.terms[k], y, s.cone)) return {false, k};
  }
  return {};
}

CompletenessCertificate completeness_certificate(const OrderedSequence& s, const Vector& y) {
  if (s.terms.empty()) throw Error(Errc::kPreconditionFailed, "empty sequence");
  if (auto c = is_nondecreasing(s); !c.ok) {
    throw Error(Errc::kPreconditionFailed, "sequence decreases at index " + std::to_string(*c.fail_index));
  }
  if (auto c = is_bounded_above(s, y); !c.ok) {
    throw Error(Errc::kPreconditionFailed, "term " + std::to_string(*c.fail_index) + " exceeds the bound");
  }
  const std::size_t n = s.terms.size();
  std::vector<Decomposition> d;
  d.reserve(n);
  for (const auto& v : s.terms) d.push_back(decompose(s.frame, v));
  const Scalar alpha_y = decompose(s.frame, y).alpha;

  CompletenessCertificate cert;
  cert.alpha_monotone = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (d[k].alpha > alpha_y || (k + 1 < n && d[k + 1].alpha < d[k].alpha)) cert.alpha_monotone = false;
  }

  // (b): -<w_j - w_k, w_j - w_k> <= (alpha_j - alpha_k)^2 with alpha_j >= alpha_k.
  cert.cauchy_bound_ok = true;
  const GramForm& g = s.frame.form();
  for (std::size_t k = 0; k < n && cert.cauchy_bound_ok; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      const Scalar da = d[j].alpha - d[k].alpha;
      const Scalar nw2 = -g.quad(d[j].w - d[k].w);
      if (da.sign() < 0 || nw2 > da * da) {
        cert.cauchy_bound_ok = false;
        cert.first_violation = k;
        break;
      }
    }
  }

  cert.limit = s.terms.back();
  cert.converged = n >= 2 && wick_norm(s.frame, s.terms[n - 1] - s.terms[n - 2]) < kLimitThreshold;
  const std::size_t tail = std::min(n, std::max<std::size_t>(2, (n + 7) / 8));
  for (std::size_t k = n - tail; k < n; ++k) {
    cert.max_residual = std::max(cert.max_residual, wick_norm(s.frame, s.terms[k] - cert.limit));
  }
  return cert;
}

CompletenessCertificate backward_completeness_certificate(const OrderedSequence& s, const Vector& y) {
  CompletenessCertificate c = completeness_certificate(reversed(s), -y);
  c.limit = -c.limit;
  return c;
}

bool monotone_wick_check(const LorentzFrame& frame, const Cone& cone, const Vector& x, const Vector& y) {
  if (!contains(cone, x) || !contains(cone, y) || !leq(x, y, cone)) {
    throw Error(Errc::kPreconditionFailed, "monotone check needs x, y in F with x <= y");
  }
  return wick_inner(frame, x, x) <= wick_inner(frame, y, y);
}

}  // namespace conekit
