#include <cmath>

#include "conekit/extension.hpp"
#include "test_util.hpp"

using namespace conekit;
using conekit::test::q;

namespace {

ExtensionProblem mink2(const Vector& x, SolverKind kind = SolverKind::kEllipsoid) {
  ExtensionProblem p{Cone::minkowski_future(1), BaseNorm::wick(LorentzFrame::minkowski(1)), x, {}};
  p.solver.kind = kind;
  return p;
}

}  // namespace

TEST(ExtendedNorm, Examples) {
  const ExtensionResult a = extended_norm(mink2(Vector{0, 1}));
  EXPECT_NEAR(a.value, std::sqrt(2.0), 1e-6);
  EXPECT_TRUE(a.converged);
  EXPECT_LE(a.lower_bound, a.value);
  EXPECT_NEAR(a.u[0].to_double(), 0.5, 1e-3);
  EXPECT_NEAR(a.u[1].to_double(), 0.5, 1e-3);
  EXPECT_NEAR(a.v[0].to_double(), 0.5, 1e-3);
  EXPECT_NEAR(a.v[1].to_double(), -0.5, 1e-3);

  const ExtensionResult b = extended_norm(mink2(Vector{2, 1}));
  EXPECT_NEAR(b.value, std::sqrt(5.0), 1e-9);
  EXPECT_EQ(b.u, (Vector{2, 1}));
  EXPECT_TRUE(b.v.is_zero());

  EXPECT_EQ(extended_norm(mink2(Vector{0, 0})).value, 0.0);
}

TEST(ExtendedNorm, ProjectedSubgradientWithinLooseTolerance) {
  const ExtensionResult r = extended_norm(mink2(Vector{0, 1}, SolverKind::kProjectedSubgradient));
  EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-3);
}

TEST(ExtendedNorm, PolyhedralL1) {
  // Orthant with l1: u = x+, v = x-, value |x|_1.
  ExtensionProblem p{Cone::orthant(2), BaseNorm::l1(), Vector{3, -2}, {}};
  EXPECT_NEAR(extended_norm(p).value, 5.0, 1e-6);
}

TEST(ExtendedNorm, RankDeficientInfeasible) {
  ExtensionProblem p{Cone::polyhedral({Vector{1, 0}}), BaseNorm::l2(), Vector{0, 1}, {}};
  EXPECT_ERRC(extended_norm(p), Errc::kInfeasible);
}

TEST(GridOracle, Examples) {
  EXPECT_NEAR(grid_oracle(mink2(Vector{0, 1})), 1.4143, 2e-3);
  EXPECT_NEAR(grid_oracle(mink2(Vector{2, 1})), 2.2361, 2e-3);
  EXPECT_EQ(grid_oracle(mink2(Vector{0, 0})), 0.0);
}

TEST(GridOracle, DimTooLarge) {
  ExtensionProblem p{Cone::orthant(4), BaseNorm::l2(), Vector{1, 1, 1, 1}, {}};
  EXPECT_ERRC(grid_oracle(p), Errc::kDimTooLarge);
}

TEST(EquivalenceConstant, Examples) {
  const Cone c = Cone::minkowski_future(1);
  const BaseNorm n = BaseNorm::wick(LorentzFrame::minkowski(1));
  EXPECT_EQ(equivalence_constant(c, n, Vector{1, 0}, q(1, 2)), 5.0);
  EXPECT_EQ(equivalence_constant(c, n, Vector{2, 0}, q(1)), 5.0);
  EXPECT_ERRC(equivalence_constant(c, n, Vector{1, 0}, q(1)), Errc::kBallNotContained);
}

TEST(FeasibleSplit, SplitsIntoCone) {
  const Cone c = Cone::minkowski_future(2);
  const FeasibleSplit s = feasible_split(c, Vector{0, 3, -1});
  EXPECT_TRUE(contains(c, s.u.to_backend(Backend::kExact)));
  EXPECT_TRUE(contains(c, s.v.to_backend(Backend::kExact)));
}

TEST(BaseNormEval, Families) {
  const Vector x{3, -4};
  EXPECT_EQ(base_norm_eval(BaseNorm::l1(), x), 7.0);
  EXPECT_EQ(base_norm_eval(BaseNorm::l2(), x), 5.0);
  EXPECT_EQ(base_norm_eval(BaseNorm::linf(), x), 4.0);
  EXPECT_EQ(base_norm_eval(BaseNorm::wick(LorentzFrame::minkowski(1)), x), 5.0);
}
