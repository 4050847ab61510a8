#pragma once

// Deterministic random generators for property suites. Distributions are
// implemented here rather than taken from <random> so that a seed produces
// the same stream on every standard library.

#include <cstdint>
#include <random>

#include "conekit/cone.hpp"
#include "conekit/gram.hpp"
#include "conekit/lorentz.hpp"

namespace conekit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double uniform01();
  double normal();
  bool coin(double p = 0.5) { return uniform01() < p; }

  // numerator uniform in [-bound, bound], denominator in [1, max_den].
  Rational rational(std::int64_t bound, std::int64_t max_den);
  Rational nonneg_rational(std::int64_t bound, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

struct SampleOptions {
  std::int64_t bound = 10;
  std::int64_t max_den = 8;
  // Probability of forcing a boundary point (zero weights, null vectors).
  double boundary_prob = 0.2;
};

Vector random_rational_vector(std::size_t dim, Rng& rng, const SampleOptions& opt = {});

// Exact random element of the cone (rational coordinates).
Vector random_cone_point(const Cone& c, Rng& rng, const SampleOptions& opt = {});

// Future causal vector for the form g relative to a timelike reference t:
// a t + w with w orthogonal to t, a uniform on [0, radius] and the Wick norm
// of w at most a * sqrt(<t,t>). Membership holds exactly.
Vector sample_future_causal(const GramForm& g, const Vector& t, const Scalar& radius, Rng& rng);

// Null future vector of Minkowski R^{1,n} with rational coordinates.
Vector random_null_vector(std::size_t spatial_dim, Rng& rng, const SampleOptions& opt = {});

// Frame of the metric L^T J L (J Minkowski, L unimodular with small
// rational entries) with t = L^{-1} e0, so <t,t> = 1 exactly.
LorentzFrame random_lorentz_frame(std::size_t spatial_dim, Rng& rng);

}  // namespace conekit
