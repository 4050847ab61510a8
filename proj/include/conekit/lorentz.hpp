#pragma once

// Signature classification, Lorentz frames, the decomposition v = alpha t + w
// and the Wick-rotated inner product (v, u) = alpha_v alpha_u - <w_v, w_u>.

#include <string>
#include <vector>

#include "conekit/gram.hpp"
#include "conekit/hypnorm.hpp"

namespace conekit {

enum class SignatureKind { kPositiveDefinite, kLorentzian, kDegenerate, kOther };

struct Signature {
  SignatureKind kind = SignatureKind::kOther;
  std::size_t p_plus = 0;
  std::size_t n_minus = 0;
  std::size_t z_zero = 0;

  // "PositiveDefinite", "Lorentzian(2)", "Degenerate", "Other(1,1,1)".
  std::string to_string() const;
};

// Exact: congruence diagonalization over Q. Float: eigenvalues with zero
// threshold 1e-9 * max |lambda|. A nonzero null space is reported Degenerate
// before any other verdict.
Signature classify(const SymMatrix& m);
Signature classify(const GramForm& g);

// Gram matrix of the polarization inner product of h on the given basis.
GramForm gram_from_cone_basis(const HyperbolicNorm& h, const std::vector<Vector>& basis);

class LorentzFrame {
 public:
  // Requires <t,t> = 1 (exactly, or within ctx for float data) and a
  // Lorentzian form; t must lie in the span of the form.
  LorentzFrame(GramForm form, Vector t, const ToleranceContext& ctx = {});
  // Standard Minkowski R^{1,n} with t = e0.
  static LorentzFrame minkowski(std::size_t spatial_dim);

  const GramForm& form() const { return form_; }
  const Vector& t() const { return t_; }

 private:
  GramForm form_;
  Vector t_;
};

struct Decomposition {
  Scalar alpha;
  Vector w;
};

Decomposition decompose(const LorentzFrame& frame, const Vector& v);
Scalar wick_inner(const LorentzFrame& frame, const Vector& u, const Vector& v);
double wick_norm(const LorentzFrame& frame, const Vector& v);

enum class CausalClass { kFutureCausal, kPastCausal, kSpacelike, kZero };
std::string causal_class_name(CausalClass c);
CausalClass causal_class(const LorentzFrame& frame, const Vector& v);

struct FutureDefect {
  double defect = 0;   // alpha - wick_norm(w)
  int exact_sign = 0;  // sign(alpha^2 - (w, w))
};
FutureDefect future_defect(const LorentzFrame& frame, const Vector& x);

}  // namespace conekit
