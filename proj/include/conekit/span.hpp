#pragma once

// span(F) as formal differences v - w of cone elements, with
// (v1, w1) ~ (v2, w2) iff v1 + w2 = v2 + w1.

#include <functional>

#include "conekit/cone.hpp"
#include "conekit/lorentz.hpp"

namespace conekit {

class FormalDifference {
 public:
  // Throws NotMember unless pos, neg lie in c.
  FormalDifference(Vector pos, Vector neg, Cone c);

  const Vector& pos() const { return pos_; }
  const Vector& neg() const { return neg_; }
  const Cone& cone() const { return cone_; }
  // pos - neg in ambient coordinates.
  Vector value() const { return pos_ - neg_; }
  std::string to_string() const;

 private:
  Vector pos_;
  Vector neg_;
  Cone cone_;
};

FormalDifference embed(const Vector& x, const Cone& c);
bool equiv(const FormalDifference& a, const FormalDifference& b, const ToleranceContext& ctx = {});
// Equivalence class comparison.
inline bool operator==(const FormalDifference& a, const FormalDifference& b) { return equiv(a, b); }

using ConeMap = std::function<Vector(const Vector&)>;
// f(pos) - f(neg).
Vector extend_linear(const ConeMap& f, const FormalDifference& d);

// Orthant only: subtract the componentwise minimum from both sides.
FormalDifference canonicalize(const FormalDifference& d);

struct FutureSplit {
  Vector v1;
  Vector v2;
  // Rational lambda used for v1, v2; equals the minimal lambda when
  // (|alpha| + n(w))/2 is rational, otherwise a dyadic upper bound.
  Rational lambda;
  double lambda_star = 0;  // (|alpha| + n(w)) / 2
  bool lambda_exact = false;
};

// x = v1 - v2 with v1 = lambda t + x/2, v2 = lambda t - x/2 both future
// causal. Throws NotLorentzian (via the frame) or PreconditionFailed if the
// post-check fails.
FutureSplit future_decompose(const Vector& x, const LorentzFrame& frame);

// The four inequalities <v_i, v_i> >= 0, <v_i, t> >= 0 at a given lambda,
// decided exactly.
bool future_split_holds(const Vector& x, const LorentzFrame& frame, const Rational& lambda);

}  // namespace conekit
