#pragma once

// Hyperbolic norms on cones: 1-homogeneous maps F -> [0, inf] obeying the
// reverse triangle inequality |v + w| >= |v| + |w|, and the polarization
// machinery built from them.
//
// Families:
//   PHyperbolic(p, n)   on PCone(p, n):  (x0^p - sum |x_j|^p)^(1/p)
//   DiscreteLq(q, mu)   on the orthant:  (sum mu_i f_i^q)^(1/q), 0 < q < 1
//   FormInduced(g, t)   on C_t^+:        sqrt(<v, v>)
//
// Squared norms of PHyperbolic(2, n) and FormInduced are polynomial in the
// coordinates, so every identity and inequality that can be phrased in
// squares is decided exactly on rational input.

#include <optional>
#include <variant>
#include <vector>

#include "conekit/cone.hpp"

namespace conekit {

struct PHyperbolic {
  double p = 2;
  std::size_t spatial_dim = 0;
};

struct DiscreteLq {
  double q = 0.5;
  std::vector<Scalar> weights;
};

struct FormInduced {
  GramForm form;
  Vector t;
};

class HyperbolicNorm {
 public:
  using Rep = std::variant<PHyperbolic, DiscreteLq, FormInduced>;

  static HyperbolicNorm p_hyperbolic(double p, std::size_t spatial_dim);
  static HyperbolicNorm discrete_lq(double q, std::vector<Scalar> weights);
  static HyperbolicNorm form_induced(GramForm form, Vector t);

  const Rep& rep() const { return rep_; }
  const Cone& cone() const { return cone_; }
  std::string kind() const;

  // True for the families whose squared norm is a quadratic form.
  bool exact_squares() const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&rep_);
  }

 private:
  HyperbolicNorm(Rep rep, Cone cone) : rep_(std::move(rep)), cone_(std::move(cone)) {}
  Rep rep_;
  Cone cone_;
};

// Extended nonnegative real; +inf never occurs for the implemented families.
using ExtendedReal = double;

ExtendedReal norm_eval(const HyperbolicNorm& h, const Vector& x);
// Exact <x,x> for PHyperbolic(2, n) and FormInduced; UnsupportedFamily
// otherwise.
Scalar norm_sq_eval(const HyperbolicNorm& h, const Vector& x);

// |u + v| - |u| - |v|.
double reverse_triangle_residual(const HyperbolicNorm& h, const Vector& u, const Vector& v);
// Exact sign of the residual when the family allows it (squared comparison).
std::optional<int> reverse_triangle_sign(const HyperbolicNorm& h, const Vector& u, const Vector& v);

// |v + 2w|^2 + |v|^2 - 2|v + w|^2 - 2|w|^2; exact on rational input for
// PHyperbolic with p in {1, 2} and FormInduced, float otherwise.
Scalar polarizability_residual(const HyperbolicNorm& h, const Vector& v, const Vector& w);

// (|v + w|^2 - |v|^2 - |w|^2) / 2.
Scalar polar_inner(const HyperbolicNorm& h, const Vector& v, const Vector& w);

struct ReverseCsResult {
  double residual = 0;  // <v,w> - |v||w|
  // Exact mode: sign(<v,w>^2 - |v|^2 |w|^2) and sign(<v,w>).
  std::optional<int> gap_sign;
  std::optional<int> inner_sign;
  // Exact mode: reverse CS holds, i.e. <v,w> >= 0 and gap >= 0.
  std::optional<bool> holds;
};
ReverseCsResult reverse_cs_residual(const HyperbolicNorm& h, const Vector& v, const Vector& w);

struct EqualityResult {
  bool equality = false;
  bool collinear = false;
};
EqualityResult equality_is_collinear(const HyperbolicNorm& h, const Vector& v, const Vector& w,
                                     const ToleranceContext& ctx = {});

// v = lambda w or w = lambda v with lambda >= 0 (zero vectors count).
bool nonneg_collinear(const Vector& v, const Vector& w, const ToleranceContext& ctx = {});

}  // namespace conekit
