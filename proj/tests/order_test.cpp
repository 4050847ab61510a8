#include <cmath>

#include "conekit/order.hpp"
#include "test_util.hpp"

using namespace conekit;
using conekit::test::q;

namespace {

const Vector kT{1, 0};

OrderedSequence seq(std::vector<Vector> terms) {
  return OrderedSequence{Cone::minkowski_future(1), LorentzFrame::minkowski(1), std::move(terms)};
}

// v_k = (1 - 2^-k) t for k < n.
OrderedSequence halving(std::size_t n) {
  GeometricRule r;
  r.target = kT;
  r.ratio = Rational(1, 2);
  r.start = Vector{0, 0};
  r.n = n;
  return seq(generate(r));
}

OrderedSequence linear(std::size_t n) { return seq(generate(AffineRule{Vector{0, 0}, kT, n})); }

}  // namespace

TEST(Generate, GeometricTerms) {
  const OrderedSequence s = halving(4);
  ASSERT_EQ(s.terms.size(), 4u);
  EXPECT_EQ(s.terms[0], (Vector{0, 0}));
  EXPECT_EQ(s.terms[1], (Vector{q(1, 2), 0}));
  EXPECT_EQ(s.terms[3], (Vector{q(7, 8), 0}));
}

TEST(IsNondecreasing, Examples) {
  EXPECT_TRUE(is_nondecreasing(halving(20)).ok);
  const OrderCheck alt = is_nondecreasing(seq({Vector{0, 0}, kT, Vector{0, 0}, kT}));
  EXPECT_FALSE(alt.ok);
  EXPECT_EQ(alt.fail_index, 1u);
  EXPECT_TRUE(is_nondecreasing(seq({kT, kT, kT})).ok);
}

TEST(IsBoundedAbove, Examples) {
  EXPECT_TRUE(is_bounded_above(halving(20), kT).ok);
  const OrderCheck r = is_bounded_above(linear(20), Vector{10, 0});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.fail_index, 11u);
  EXPECT_TRUE(is_bounded_above(seq({}), kT).ok);
}

TEST(CompletenessCertificate, Examples) {
  const CompletenessCertificate a = completeness_certificate(halving(40), kT);
  EXPECT_TRUE(a.alpha_monotone);
  EXPECT_TRUE(a.cauchy_bound_ok);
  EXPECT_LT(a.max_residual, 1e-9);
  EXPECT_NEAR(a.limit[0].to_double(), 1.0, 1e-9);
  EXPECT_NEAR(a.limit[1].to_double(), 0.0, 1e-12);

  GeometricRule r;
  r.target = Vector{1, 1};
  r.ratio = Rational(1, 2);
  r.start = Vector{0, 0};
  r.n = 64;
  const CompletenessCertificate b = completeness_certificate(seq(generate(r)), Vector{2, 1});
  EXPECT_TRUE(b.alpha_monotone && b.cauchy_bound_ok && b.converged);
  EXPECT_NEAR(b.limit[0].to_double(), 1.0, 1e-12);
  EXPECT_NEAR(b.limit[1].to_double(), 1.0, 1e-12);
}

TEST(CompletenessCertificate, Preconditions) {
  EXPECT_ERRC(completeness_certificate(linear(20), Vector{10, 0}), Errc::kPreconditionFailed);
  EXPECT_ERRC(completeness_certificate(seq({}), kT), Errc::kPreconditionFailed);
  EXPECT_ERRC(completeness_certificate(seq({kT, Vector{0, 0}}), kT), Errc::kPreconditionFailed);
}

TEST(BackwardCompleteness, ByOrderReversal) {
  const OrderedSequence down = reversed(halving(40));
  EXPECT_EQ(down.terms[1], (Vector{q(-1, 2), 0}));
  const CompletenessCertificate c = backward_completeness_certificate(down, -kT);
  EXPECT_TRUE(c.alpha_monotone && c.cauchy_bound_ok);
  EXPECT_NEAR(c.limit[0].to_double(), -1.0, 1e-9);
}

TEST(MonotoneWick, Examples) {
  const LorentzFrame f = LorentzFrame::minkowski(1);
  const Cone c = Cone::minkowski_future(1);
  EXPECT_TRUE(monotone_wick_check(f, c, Vector{1, 0}, Vector{3, 1}));
  EXPECT_TRUE(monotone_wick_check(f, c, Vector{3, 1}, Vector{3, 1}));
  EXPECT_TRUE(monotone_wick_check(f, c, Vector{0, 0}, Vector{2, 1}));
  EXPECT_ERRC(monotone_wick_check(f, c, Vector{3, 1}, Vector{1, 0}), Errc::kPreconditionFailed);
}
