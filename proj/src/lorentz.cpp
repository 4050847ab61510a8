#include "conekit/lorentz.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace conekit {

std::string Signature::to_string() const {
  switch (kind) {
    case SignatureKind::kPositiveDefinite:
      return "PositiveDefinite";
    case SignatureKind::kLorentzian:
      return "Lorentzian(" + std::to_string(n_minus) + ")";
    case SignatureKind::kDegenerate:
      return "Degenerate";
    case SignatureKind::kOther:
      break;
  }
  return "Other(" + std::to_string(p_plus) + "," + std::to_string(n_minus) + "," +
         std::to_string(z_zero) + ")";
}

namespace {

Signature verdict(std::size_t pos, std::size_t neg, std::size_t zero) {
  Signature s{SignatureKind::kOther, pos, neg, zero};
  const std::size_t n = pos + neg + zero;
  if (zero > 0) {
    s.kind = SignatureKind::kDegenerate;
  } else if (pos == n) {
    s.kind = SignatureKind::kPositiveDefinite;
  } else if (pos == 1) {
    s.kind = SignatureKind::kLorentzian;
  }
  // A 1-dimensional positive form is both; report it as Lorentzian(0).
  if (n == 1 && pos == 1) s.kind = SignatureKind::kLorentzian;
  return s;
}

Signature classify_exact(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).rational();
  }
  auto swap_index = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    for (auto& row : a) std::swap(row[i], row[k]);
  };
  std::size_t pos = 0, neg = 0, zero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (sgn(a[i][i]) != 0) piv = i;
    }
    if (piv == n) {
      // All remaining diagonals vanish; a nonzero a[i][j] gives
      // (e_i + e_j)^T A (e_i + e_j) = 2 a[i][j] != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    swap_index(piv, k);
    const Rational d = a[k][k];
    (sgn(d) > 0 ? pos : neg) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a[r][k]) == 0) continue;
      const Rational f = a[r][k] / d;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
  }
  return verdict(pos, neg, zero);
}

Signature classify_float(const SymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = n > 0 ? ev.cwiseAbs().maxCoeff() : 0.0;
  const double thr = 1e-9 * scale;
  std::size_t pos = 0, neg = 0, zero = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (scale == 0 || std::fabs(ev(i)) <= thr) {
      ++zero;
    } else {
      (ev(i) > 0 ? pos : neg) += 1;
    }
  }
  return verdict(pos, neg, zero);
}

}  // namespace

Signature classify(const SymMatrix& m) {
  if (m.dim() == 0) return verdict(0, 0, 0);
  return m.backend() == Backend::kExact ? classify_exact(m) : classify_float(m);
}

Signature classify(const GramForm& g) { return classify(g.gram()); }

GramForm gram_from_cone_basis(const HyperbolicNorm& h, const std::vector<Vector>& basis) {
  if (basis.empty()) throw Error(Errc::kInvalidArgument, "empty basis");
  Matrix m(basis.size(), basis.size(), basis.front().backend());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Scalar v = polar_inner(h, basis[i], basis[j]);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  // GramForm rejects dependent bases.
  return GramForm(basis, SymMatrix(std::move(m)));
}

LorentzFrame::LorentzFrame(GramForm form, Vector t, const ToleranceContext& ctx)
    : form_(std::move(form)), t_(std::move(t)) {
  const Scalar tt = form_.quad(t_);
  const bool unit = tt.is_exact() ? tt == Scalar(1) : approx_eq(tt.to_double(), 1.0, ctx);
  if (!unit) throw Error(Errc::kInvalidArgument, "frame vector needs <t,t> = 1, got " + tt.to_string());
  if (classify(form_).kind != SignatureKind::kLorentzian) {
    throw Error(Errc::kNotLorentzian, "frame form is " + classify(form_).to_string());
  }
}

LorentzFrame LorentzFrame::minkowski(std::size_t spatial_dim) {
  return LorentzFrame(GramForm::minkowski(spatial_dim), Vector::unit(spatial_dim + 1, 0));
}

Decomposition decompose(const LorentzFrame& frame, const Vector& v) {
  Scalar alpha = frame.form().inner(v, frame.t());
  Vector w = v - frame.t().to_backend(alpha.backend()) * alpha;
  return {std::move(alpha), std::move(w)};
}

Scalar wick_inner(const LorentzFrame& frame, const Vector& u, const Vector& v) {
  const Decomposition du = decompose(frame, u);
  const Decomposition dv = decompose(frame, v);
  return du.alpha * dv.alpha - frame.form().inner(du.w, dv.w);
}

double wick_norm(const LorentzFrame& frame, const Vector& v) {
  return sqrt_to_double(wick_inner(frame, v, v));
}

std::string causal_class_name(CausalClass c) {
  static const char* names[] = {"FutureCausal", "PastCausal", "Spacelike", "Zero"};
  return names[static_cast<int>(c)];
}

CausalClass causal_class(const LorentzFrame& frame, const Vector& v) {
  if (v.is_zero()) return CausalClass::kZero;
  if (frame.form().quad(v).sign() < 0) return CausalClass::kSpacelike;
  return frame.form().inner(v, frame.t()).sign() >= 0 ? CausalClass::kFutureCausal
                                                      : CausalClass::kPastCausal;
}

FutureDefect future_defect(const LorentzFrame& frame, const Vector& x) {
  const CausalClass c = causal_class(frame, x);
  if (c != CausalClass::kFutureCausal && c != CausalClass::kZero) {
    throw Error(Errc::kNotFutureCausal, x.to_string() + " is " + causal_class_name(c));
  }
  const Decomposition d = decompose(frame, x);
  const Scalar ww = wick_inner(frame, d.w, d.w);
  FutureDefect r;
  r.defect = d.alpha.to_double() - sqrt_to_double(ww);
  r.exact_sign = (d.alpha * d.alpha - ww).sign();
  return r;
}

}  // namespace conekit
