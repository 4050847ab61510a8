#pragma once

// The extended norm n~(x) = inf { n(u) + n(v) : u, v in F, x = u - v } of a
// base norm n on a generating cone F, a brute-force grid oracle for it, and
// the equivalence constant K = 2 n(s) / delta + 1.

#include <cstdint>
#include <optional>
#include <string>

#include "conekit/cone.hpp"
#include "conekit/lorentz.hpp"

namespace conekit {

enum class BaseNormKind { kWick, kL1, kL2, kLinf };

struct BaseNorm {
  BaseNormKind kind = BaseNormKind::kL2;
  std::optional<LorentzFrame> frame;  // kWick only

  static BaseNorm wick(LorentzFrame f) { return {BaseNormKind::kWick, std::move(f)}; }
  static BaseNorm l1() { return {BaseNormKind::kL1, std::nullopt}; }
  static BaseNorm l2() { return {BaseNormKind::kL2, std::nullopt}; }
  static BaseNorm linf() { return {BaseNormKind::kLinf, std::nullopt}; }
  std::string name() const;
};

double base_norm_eval(const BaseNorm& n, const Vector& x);

enum class SolverKind { kEllipsoid, kProjectedSubgradient, kGridOracle };
std::string solver_name(SolverKind k);

struct SolverConfig {
  SolverKind kind = SolverKind::kEllipsoid;
  // Grid oracle: points per axis and zoom rounds.
  std::size_t resolution = 201;
  std::size_t refine_rounds = 4;
  // Iterative solvers.
  std::size_t max_iters = 100000;
  double step_scale = 1.0;  // projected subgradient step c / sqrt(k)
  double tol = 1e-8;        // relative optimality gap (ellipsoid)
};

struct ExtensionProblem {
  Cone cone;
  BaseNorm base;
  Vector x;
  SolverConfig solver;
};

struct ExtensionResult {
  double value = 0;
  Vector u;  // x = u - v, u, v in F
  Vector v;
  // Certified lower bound (ellipsoid); NaN when the solver has none.
  double lower_bound = 0;
  std::size_t iterations = 0;
  bool converged = false;  // false: max_iters reached, best-so-far returned
  std::string solver;
};

// Polyhedral, Orthant, PCone(2) and FutureCone are supported. Throws
// Infeasible when F does not generate the ambient space.
ExtensionResult extended_norm(const ExtensionProblem& p);

// Minimum of n(u) + n(u - x) over grid points u with u, u - x in F (exact
// membership). Ambient dimension <= 3, resolution <= 401. Upper bound on
// n~(x).
double grid_oracle(const ExtensionProblem& p);

// A feasible exact split x = u - v (u = x, u = 0, LP point or lambda t +- x/2).
struct FeasibleSplit {
  Vector u;
  Vector v;
};
FeasibleSplit feasible_split(const Cone& c, const Vector& x);

// K = 2 n(s) / delta + 1 after checking that sampled points of the sphere
// { n(z - s) = delta } lie in F. Throws BallNotContained with a witness.
double equivalence_constant(const Cone& c, const BaseNorm& n, const Vector& s, const Scalar& delta,
                            std::size_t samples = 1000, std::uint64_t seed = 1);

}  // namespace conekit
