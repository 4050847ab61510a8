#include <cmath>

#include "conekit/hypnorm.hpp"
#include "conekit/sampling.hpp"
#include "test_util.hpp"

using namespace conekit;
using conekit::test::q;

namespace {

HyperbolicNorm p2(std::size_t n) { return HyperbolicNorm::p_hyperbolic(2, n); }

}  // namespace

TEST(NormEval, Examples) {
  EXPECT_NEAR(norm_eval(p2(2), Vector{2, 1, 1}), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(norm_eval(p2(2), Vector{1, 0, 0}), 1.0);
  EXPECT_NEAR(norm_eval(HyperbolicNorm::discrete_lq(0.5, {q(1), q(1)}), Vector{4, 9}), 25.0, 1e-12);
}

TEST(NormEval, PFamilies) {
  EXPECT_EQ(norm_eval(HyperbolicNorm::p_hyperbolic(1, 2), Vector{5, 1, -2}), 2.0);
  EXPECT_NEAR(norm_eval(HyperbolicNorm::p_hyperbolic(3, 1), Vector{3, -1}), std::cbrt(26.0), 1e-12);
}

TEST(NormEval, OutsideCone) { EXPECT_ERRC(norm_eval(p2(1), Vector{1, 2}), Errc::kOutsideCone); }

TEST(Factories, RejectBadParameters) {
  EXPECT_ERRC(HyperbolicNorm::p_hyperbolic(0.5, 1), Errc::kInvalidArgument);
  EXPECT_ERRC(HyperbolicNorm::discrete_lq(1.5, {q(1)}), Errc::kInvalidArgument);
  EXPECT_ERRC(HyperbolicNorm::discrete_lq(0.5, {q(1), q(0)}), Errc::kInvalidArgument);
}

TEST(NormSqEval, Examples) {
  EXPECT_EQ(norm_sq_eval(p2(1), Vector{2, 1}), q(3));
  EXPECT_EQ(norm_sq_eval(p2(1), Vector{1, 1}), q(0));
  EXPECT_EQ(norm_sq_eval(p2(1), Vector{5, 3}), q(16));
}

TEST(NormSqEval, UnsupportedFamily) {
  EXPECT_ERRC(norm_sq_eval(HyperbolicNorm::p_hyperbolic(1, 1), Vector{2, 1}), Errc::kUnsupportedFamily);
}

TEST(ReverseTriangle, Examples) {
  EXPECT_NEAR(reverse_triangle_residual(p2(1), Vector{2, 1}, Vector{3, -1}), 5 - std::sqrt(3.0) - std::sqrt(8.0), 1e-12);
  EXPECT_EQ(reverse_triangle_sign(p2(1), Vector{2, 1}, Vector{3, -1}), 1);
  EXPECT_EQ(reverse_triangle_sign(p2(1), Vector{2, 1}, Vector{4, 2}), 0);
  EXPECT_EQ(reverse_triangle_sign(HyperbolicNorm::p_hyperbolic(1, 1), Vector{2, 1}, Vector{3, -1}), 1);
  EXPECT_ERRC(reverse_triangle_residual(p2(1), Vector{0, 1}, Vector{1, 0}), Errc::kOutsideCone);
}

TEST(Polarizability, Examples) {
  const Vector v{1, 1}, w{1, -1};
  EXPECT_EQ(polarizability_residual(p2(1), v, w), q(0));
  EXPECT_EQ(polarizability_residual(HyperbolicNorm::p_hyperbolic(1, 1), v, w), q(-4));
  const double p3 = polarizability_residual(HyperbolicNorm::p_hyperbolic(3, 1), v, w).to_double();
  EXPECT_NEAR(p3, std::pow(26.0, 2.0 / 3.0) - 8, 1e-9);
  EXPECT_NEAR(p3, 0.7764, 1e-4);
}

TEST(Polarizability, ZeroOnRandomP2Pairs) {
  Rng rng(4);
  for (int k = 0; k < 500; ++k) {
    const HyperbolicNorm h = p2(1 + k % 5);
    EXPECT_EQ(polarizability_residual(h, random_cone_point(h.cone(), rng), random_cone_point(h.cone(), rng)), q(0));
  }
}

TEST(PolarInner, Examples) {
  EXPECT_EQ(polar_inner(p2(1), Vector{2, 1}, Vector{3, -1}), q(7));
  EXPECT_EQ(polar_inner(p2(1), Vector{1, 0}, Vector{1, 0}), q(1));
  EXPECT_EQ(polar_inner(p2(1), Vector{1, 1}, Vector{1, -1}), q(2));
}

TEST(PolarInner, ExactOnOtherFamiliesUnsupported) {
  EXPECT_ERRC(polar_inner(HyperbolicNorm::p_hyperbolic(3, 1), Vector{2, 1}, Vector{3, 1}), Errc::kUnsupportedFamily);
  const double f = polar_inner(HyperbolicNorm::p_hyperbolic(3, 1), conekit::test::vd({2, 1}), conekit::test::vd({3, 1}))
                       .to_double();
  EXPECT_TRUE(std::isfinite(f));
}

TEST(ReverseCs, Examples) {
  const ReverseCsResult a = reverse_cs_residual(p2(1), Vector{2, 1}, Vector{3, -1});
  EXPECT_NEAR(a.residual, 7 - std::sqrt(24.0), 1e-12);
  EXPECT_EQ(a.gap_sign, 1);
  EXPECT_EQ(a.holds, true);
  const ReverseCsResult b = reverse_cs_residual(p2(1), Vector{3, 1}, Vector{3, 1});
  EXPECT_EQ(b.gap_sign, 0);
  EXPECT_NEAR(b.residual, 0, 1e-12);
  const ReverseCsResult c = reverse_cs_residual(p2(1), Vector{1, 1}, Vector{2, 2});
  EXPECT_EQ(c.gap_sign, 0);
  EXPECT_EQ(c.residual, 0);
}

TEST(EqualityIsCollinear, Examples) {
  const EqualityResult a = equality_is_collinear(p2(1), Vector{2, 1}, Vector{4, 2});
  EXPECT_TRUE(a.equality);
  EXPECT_TRUE(a.collinear);
  const EqualityResult b = equality_is_collinear(p2(1), Vector{2, 1}, Vector{3, -1});
  EXPECT_FALSE(b.equality);
  EXPECT_FALSE(b.collinear);
  const EqualityResult c = equality_is_collinear(p2(1), Vector{0, 0}, Vector{3, -1});
  EXPECT_TRUE(c.equality);
  EXPECT_TRUE(c.collinear);
  EXPECT_ERRC(equality_is_collinear(p2(1), Vector{0, 1}, Vector{1, 0}), Errc::kOutsideCone);
}

TEST(EqualityIsCollinear, NullPairsNotCollinearAreStrict) {
  // Two independent null vectors: the reverse triangle inequality is strict.
  const EqualityResult r = equality_is_collinear(p2(1), Vector{1, 1}, Vector{1, -1});
  EXPECT_FALSE(r.equality);
  EXPECT_FALSE(r.collinear);
}

TEST(FormInduced, MatchesMinkowski) {
  const HyperbolicNorm h = HyperbolicNorm::form_induced(GramForm::minkowski(2), Vector{1, 0, 0});
  EXPECT_EQ(norm_sq_eval(h, Vector{5, 3, 4}), q(0));
  EXPECT_EQ(polar_inner(h, Vector{2, 1, 0}, Vector{3, 0, -1}), q(6));
}
