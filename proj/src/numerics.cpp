#include "conekit/numerics.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace conekit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kMixedBackend: return "MixedBackend";
    case Errc::kExactBackend: return "ExactBackend";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotMember: return "NotMember";
    case Errc::kNotLorentzian: return "NotLorentzian";
    case Errc::kNotCausal: return "NotCausal";
    case Errc::kNotFutureCausal: return "NotFutureCausal";
    case Errc::kConeMismatch: return "ConeMismatch";
    case Errc::kOutsideCone: return "OutsideCone";
    case Errc::kUnsupportedFamily: return "UnsupportedFamily";
    case Errc::kUnsupportedRepresentation: return "UnsupportedRepresentation";
    case Errc::kDependentBasis: return "DependentBasis";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kDimTooLarge: return "DimTooLarge";
    case Errc::kBallNotContained: return "BallNotContained";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view backend_name(Backend b) {
  return b == Backend::kExact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::kExact;
  if (name == "float") return Backend::kFloat;
  throw Error(Errc::kInvalidArgument, "unknown backend '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void mixed() {
  throw Error(Errc::kMixedBackend, "scalars have different backends");
}

Rational parse_decimal(std::string_view text) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::string s(text);
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long exp10 = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --exp10;
      any = true;
    }
  }
  if (!any) throw Error(Errc::kParseError, "not a number: '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    long e = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), e);
    if (ec != std::errc() || ptr == s.data() + i) {
      throw Error(Errc::kParseError, "bad exponent in '" + s + "'");
    }
    i = static_cast<size_t>(ptr - s.data());
    exp10 += e;
  }
  if (i != s.size()) throw Error(Errc::kParseError, "trailing characters in '" + s + "'");
  Integer num(digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Scalar::Scalar(Rational q) {
  q.canonicalize();
  value_ = std::move(q);
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_decimal(text));
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Scalar(Rational(num / den));
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(Errc::kMixedBackend, "rational() on a float scalar");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::kFloat) return real(to_double());
  double v = std::get<double>(value_);
  if (!std::isfinite(v)) throw Error(Errc::kInvalidArgument, "non-finite value has no exact form");
  return Scalar(Rational(v));
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  double v = std::get<double>(value_);
  return (v > 0) - (v < 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  return format_double(std::get<double>(value_));
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return real(-std::get<double>(value_));
}

#define CONEKIT_SCALAR_OP(op)                                           \
  Scalar& Scalar::operator op##=(const Scalar& o) {                     \
    if (auto* q = std::get_if<Rational>(&value_)) {                     \
      const auto* r = std::get_if<Rational>(&o.value_);                 \
      if (!r) mixed();                                                  \
      *q op## = *r;                                                     \
    } else {                                                            \
      const auto* r = std::get_if<double>(&o.value_);                   \
      if (!r) mixed();                                                  \
      std::get<double>(value_) op## = *r;                               \
    }                                                                   \
    return *this;                                                       \
  }

CONEKIT_SCALAR_OP(+)
CONEKIT_SCALAR_OP(-)
CONEKIT_SCALAR_OP(*)
#undef CONEKIT_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero() && is_exact() && o.is_exact()) {
    throw Error(Errc::kInvalidArgument, "division by zero");
  }
  if (auto* q = std::get_if<Rational>(&value_)) {
    const auto* r = std::get_if<Rational>(&o.value_);
    if (!r) mixed();
    *q /= *r;
  } else {
    const auto* r = std::get_if<double>(&o.value_);
    if (!r) mixed();
    std::get<double>(value_) /= *r;
  }
  return *this;
}

Ordering scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) mixed();
  if (a.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? Ordering::kLess : (c > 0 ? Ordering::kGreater : Ordering::kEqual);
  }
  double x = a.to_double();
  double y = b.to_double();
  if (std::isnan(x) || std::isnan(y)) {
    throw Error(Errc::kInvalidArgument, "NaN is not ordered");
  }
  return x < y ? Ordering::kLess : (x > y ? Ordering::kGreater : Ordering::kEqual);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return scalar_cmp(a, b) == Ordering::kEqual;
}

bool operator<(const Scalar& a, const Scalar& b) {
  return scalar_cmp(a, b) == Ordering::kLess;
}

bool approx_eq(double a, double b, const ToleranceContext& ctx) {
  if (a == b) return true;
  return std::fabs(a - b) <= ctx.abs_tol + ctx.rel_tol * std::max(std::fabs(a), std::fabs(b));
}

bool approx_eq(const Scalar& a, const Scalar& b, const ToleranceContext& ctx) {
  if (a.is_exact() || b.is_exact()) {
    throw Error(Errc::kExactBackend, "approx_eq on exact scalars; use scalar_cmp");
  }
  return approx_eq(a.to_double(), b.to_double(), ctx);
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

namespace {

// floor(sqrt(q) * 2^bits) as an integer.
Integer scaled_isqrt(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer shifted = num << (2 * bits);
  Integer quotient = shifted / den;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  return root;
}

Rational exact_root(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (sgn(q) < 0) throw Error(Errc::kInvalidArgument, "sqrt of a negative rational");
  if (is_rational_square(q)) return exact_root(q);
  Integer root = scaled_isqrt(q, bits) + 1;
  Rational r(root, Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (sgn(q) < 0) throw Error(Errc::kInvalidArgument, "sqrt of a negative rational");
  if (is_rational_square(q)) return exact_root(q);
  Rational r(scaled_isqrt(q, bits), Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational ceil_dyadic(double v, unsigned bits) {
  if (!std::isfinite(v)) throw Error(Errc::kInvalidArgument, "non-finite value");
  Rational exact(v);
  Rational scaled = exact * Rational(Integer(1) << bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(c, Integer(1) << bits);
  r.canonicalize();
  return r;
}

double sqrt_to_double(const Scalar& s) {
  // Callers establish nonnegativity; float round-off below zero clamps to 0.
  double v = s.to_double();
  return v > 0 ? std::sqrt(v) : 0.0;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace conekit
