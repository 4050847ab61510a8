#include <cmath>

#include "conekit/numerics.hpp"
#include "test_util.hpp"

using namespace conekit;
using conekit::test::q;

TEST(ScalarCmp, Examples) {
  EXPECT_EQ(scalar_cmp(q(3, 2), q(3, 2)), Ordering::kEqual);
  EXPECT_EQ(scalar_cmp(q(1, 3), q(2, 5)), Ordering::kLess);
  EXPECT_EQ(scalar_cmp(Scalar::real(0.1) + Scalar::real(0.2), Scalar::real(0.3)), Ordering::kGreater);
}

TEST(ScalarCmp, MixedBackendThrows) { EXPECT_ERRC(scalar_cmp(q(1), Scalar::real(1.0)), Errc::kMixedBackend); }

TEST(ScalarArith, MixedBackendThrows) { EXPECT_ERRC(q(1) + Scalar::real(1.0), Errc::kMixedBackend); }

TEST(ApproxEq, Examples) {
  EXPECT_TRUE(approx_eq(Scalar::real(1.0), Scalar::real(1.0 + 1e-12)));
  EXPECT_FALSE(approx_eq(Scalar::real(1.0), Scalar::real(1.1)));
  ToleranceContext rel_only{0.0, 1e-9};
  EXPECT_TRUE(approx_eq(Scalar::real(1e6), Scalar::real(1e6 * (1 + 1e-10)), rel_only));
}

TEST(ApproxEq, ExactBackendThrows) { EXPECT_ERRC(approx_eq(q(1), q(1)), Errc::kExactBackend); }

TEST(Rational, LowestTerms) {
  EXPECT_EQ(q(6, 4).to_string(), "3/2");
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(q(4, 2).to_string(), "2");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Scalar::parse("1/3"), q(1, 3));
  EXPECT_EQ(Scalar::parse("-7"), q(-7));
  EXPECT_EQ(Scalar::parse("0.25"), q(1, 4));
  EXPECT_EQ(Scalar::parse("-1e-3"), q(-1, 1000));
}

TEST(Sqrt, Bounds) {
  EXPECT_EQ(sqrt_upper(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(sqrt_lower(Rational(9, 4)), Rational(3, 2));
  EXPECT_TRUE(is_rational_square(Rational(49, 16)));
  EXPECT_FALSE(is_rational_square(Rational(2)));
  const Rational hi = sqrt_upper(Rational(2)), lo = sqrt_lower(Rational(2));
  EXPECT_GE(hi * hi, 2);
  EXPECT_LE(lo * lo, 2);
  EXPECT_LE(hi - lo, Rational(1, 1L << 30));
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(Scalar, FloatToExactIsBinaryValue) {
  EXPECT_EQ(Scalar::real(0.5).to_backend(Backend::kExact), q(1, 2));
  EXPECT_EQ(Scalar::real(0.1).to_backend(Backend::kExact).to_double(), 0.1);
}
