#pragma once

// The cone order x <= y iff y - x in F on finite sequence prefixes, and the
// Wick-norm mechanism behind sequential forward completeness.

#include <optional>
#include <variant>
#include <vector>

#include "conekit/cone.hpp"
#include "conekit/lorentz.hpp"

namespace conekit {

struct ExplicitRule {
  std::vector<Vector> terms;
};

// v_k = start + k step.
struct AffineRule {
  Vector start;
  Vector step;
  std::size_t n = 64;
};

// v_k = target + ratio^k (start - target); start defaults to 0.
struct GeometricRule {
  Vector target;
  Rational ratio;
  std::optional<Vector> start;
  std::size_t n = 64;
};

using SequenceRule = std::variant<ExplicitRule, AffineRule, GeometricRule>;

// Terms v_0, ..., v_{N-1}.
std::vector<Vector> generate(const SequenceRule& rule);

struct OrderedSequence {
  Cone cone;
  LorentzFrame frame;
  std::vector<Vector> terms;
};

// Order reversal: x <=' y iff x - y in F, realized by negating the terms.
OrderedSequence reversed(const OrderedSequence& s);

struct OrderCheck {
  bool ok = true;
  std::optional<std::size_t> fail_index;
};

// v_{k+1} - v_k in F for every k; fail_index is the first failing k.
OrderCheck is_nondecreasing(const OrderedSequence& s);
// v_k <= y for every k.
OrderCheck is_bounded_above(const OrderedSequence& s, const Vector& y);

struct CompletenessCertificate {
  // alpha_k nondecreasing and alpha_k <= alpha_y.
  bool alpha_monotone = false;
  // n(w_j - w_k) <= alpha_j - alpha_k for j > k, decided in squares.
  bool cauchy_bound_ok = false;
  // wick_norm(v_{N-1} - v_{N-2}) < 1e-9.
  bool converged = false;
  Vector limit;
  // max wick_norm(v_k - limit) over the tail (last ceil(N/8) terms, at least 2).
  double max_residual = 0;
  std::optional<std::size_t> first_violation;  // pair index k of (b)
};

inline constexpr double kLimitThreshold = 1e-9;

// Throws PreconditionFailed when the prefix is not nondecreasing and
// bounded by y, or is empty.
CompletenessCertificate completeness_certificate(const OrderedSequence& s, const Vector& y);
// Same for nonincreasing sequences bounded below by y.
CompletenessCertificate backward_completeness_certificate(const OrderedSequence& s, const Vector& y);

// x, y in F with x <= y implies (x, x) <= (y, y); PreconditionFailed
// otherwise.
bool monotone_wick_check(const LorentzFrame& frame, const Cone& cone, const Vector& x, const Vector& y);

}  // namespace conekit
