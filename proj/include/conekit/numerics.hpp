#pragma once

// Scalars over the ordered field Q (exact, GMP rationals) or IEEE doubles.
//
// A Scalar carries its backend. Arithmetic between two scalars requires a
// common backend; mixing raises Errc::kMixedBackend. Exact values are always
// kept in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "conekit/error.hpp"

namespace conekit {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Backend { kExact, kFloat };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

enum class Ordering { kLess, kEqual, kGreater };

struct ToleranceContext {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
};

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q);  // NOLINT(google-explicit-constructor)
  template <class I>
    requires(std::is_integral_v<I> && !std::is_same_v<I, bool>)
  Scalar(I n) : value_(Rational(static_cast<long>(n))) {}  // NOLINT

  static Scalar exact(long num, long den = 1);
  static Scalar real(double v) {
    Scalar s;
    s.value_ = v;
    return s;
  }
  // Accepts "p/q", integers and plain decimals ("0.25", "-1e-3"); all exact.
  static Scalar parse(std::string_view text);

  Backend backend() const {
    return std::holds_alternative<Rational>(value_) ? Backend::kExact
                                                    : Backend::kFloat;
  }
  bool is_exact() const { return backend() == Backend::kExact; }

  const Rational& rational() const;
  double to_double() const;
  // Same value in the requested backend; float -> exact is the exact binary
  // value of the double.
  Scalar to_backend(Backend b) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  // "p/q" (or "p" when q = 1) for exact, shortest round-trip decimal for float.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  std::variant<Rational, double> value_;
};

// Total order. Exact for rationals; raw IEEE ordering for floats.
Ordering scalar_cmp(const Scalar& a, const Scalar& b);

// |a-b| <= abs_tol + rel_tol * max(|a|,|b|). Float backend only.
bool approx_eq(const Scalar& a, const Scalar& b, const ToleranceContext& ctx = {});
bool approx_eq(double a, double b, const ToleranceContext& ctx = {});

// Rational bounds on square roots of a nonnegative rational. Both are exact
// when q is the square of a rational; otherwise they bracket sqrt(q) within
// 2^-bits.
Rational sqrt_upper(const Rational& q, unsigned bits = 40);
Rational sqrt_lower(const Rational& q, unsigned bits = 40);
bool is_rational_square(const Rational& q);

// Smallest dyadic rational k/2^bits that is >= v.
Rational ceil_dyadic(double v, unsigned bits = 40);

// sqrt of a scalar as a double (forces the float backend).
double sqrt_to_double(const Scalar& s);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace conekit
