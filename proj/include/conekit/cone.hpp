#pragma once

// Proper linear cones in R^n and the predicates on them: membership, order,
// properness, algebraic interior (core) and dual-cone membership.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conekit/gram.hpp"
#include "conekit/linalg.hpp"

namespace conekit {

// Conic hull { sum theta_i g_i : theta >= 0 }.
struct PolyhedralCone {
  std::vector<Vector> generators;
  std::size_t dim = 0;
};

// { (x0, x) in R^{1+n} : x0 >= |x|_p }, p in [1, inf].
struct PCone {
  double p = 2;
  std::size_t spatial_dim = 0;
};

// C_t^+ = { v : <v,v> >= 0, <v,t> >= 0 } for a form with <t,t> > 0.
struct FutureCone {
  GramForm form;
  Vector t;
};

// { f : f_i >= 0 }.
struct Orthant {
  std::size_t dim = 0;
};

class Cone {
 public:
  using Rep = std::variant<PolyhedralCone, PCone, FutureCone, Orthant>;

  static Cone polyhedral(std::vector<Vector> generators);
  static Cone p_cone(double p, std::size_t spatial_dim);
  static Cone future(GramForm form, Vector t);
  static Cone minkowski_future(std::size_t spatial_dim);
  static Cone orthant(std::size_t dim);

  const Rep& rep() const { return rep_; }
  std::size_t ambient_dim() const;
  std::string kind() const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&rep_);
  }

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  explicit Cone(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

struct ProperResult {
  bool proper = false;
  std::optional<Vector> witness;  // nonzero v with v, -v in F
};

struct CoreResult {
  bool in_core = false;
  // Common step of the interior search (polyhedral only).
  std::optional<Rational> epsilon;
  // "algebraic" for the epsilon search, "strict" for closed-form strict
  // inequalities.
  std::string method;
};

struct SelfDualityReport {
  bool holds = true;
  // F subset F*: exact pairwise generator check (polyhedral) or reverse
  // Cauchy-Schwarz (future cone).
  bool forward_holds = true;
  // No sampled causal vector lies in F* \ F.
  bool backward_holds = true;
  std::size_t samples = 0;
  std::optional<Vector> witness;
  std::string detail;
};

bool contains(const Cone& c, const Vector& x);
ProperResult is_proper(const Cone& c);
// x <= y  iff  y - x in F.
bool leq(const Vector& x, const Vector& y, const Cone& c);
// Throws NotMember when x is not in F.
CoreResult in_core(const Cone& c, const Vector& x);
bool dual_contains(const Cone& c, const GramForm& g, const Vector& v);
SelfDualityReport self_duality_report(const Cone& c, const GramForm& g, std::size_t samples,
                                      std::uint64_t seed, const Scalar& radius = Scalar(10));

// Inward facet normals of a full-dimensional pointed polyhedral cone:
// x in F iff <a, x> >= 0 for every returned a. Exact.
std::vector<Vector> polyhedral_facets(const PolyhedralCone& c);

}  // namespace conekit
