#pragma once

// JSON encodings of library values. Rationals are strings "p/q" (or "p"),
// floats are JSON numbers. Decoding failures raise Errc::kParseError.

#include <json.hpp>

#include "conekit/cone.hpp"
#include "conekit/extension.hpp"
#include "conekit/hypnorm.hpp"
#include "conekit/lorentz.hpp"
#include "conekit/order.hpp"

namespace conekit {

using Json = nlohmann::json;

// Strings and integers decode exactly; non-integral numbers as floats.
Scalar scalar_from_json(const Json& j);
Json to_json(const Scalar& s);

// Exact unless some entry is a float, in which case every entry is float.
Vector vector_from_json(const Json& j);
Json to_json(const Vector& v);
std::vector<Vector> vectors_from_json(const Json& j);
Json to_json(const std::vector<Vector>& vs);

SymMatrix sym_matrix_from_json(const Json& j);
Json to_json(const SymMatrix& m);

// {"minkowski": n} | {"gram": [[...]]} (standard basis) |
// {"basis": [[...]], "gram": [[...]]}
GramForm gram_form_from_json(const Json& j);
Json to_json(const GramForm& g);

// {"type": "polyhedral", "generators": [...]} | {"type": "pcone", "p": 2,
// "spatial_dim": n} | {"type": "future", "form": ..., "t": [...]} |
// {"type": "minkowski_future", "spatial_dim": n} | {"type": "orthant", "dim": n}
Cone cone_from_json(const Json& j);
Json to_json(const Cone& c);

// {"family": "p_hyperbolic", "p": 2, "spatial_dim": n} |
// {"family": "discrete_lq", "q": "1/2", "weights": [...]} |
// {"family": "form_induced", "form": ..., "t": [...]}
HyperbolicNorm norm_from_json(const Json& j);

// {"form": ..., "t": [...]} or {"minkowski": n}
LorentzFrame frame_from_json(const Json& j);

// "l1" | "l2" | "linf" | "wick" (needs a frame)
BaseNorm base_norm_from_json(const Json& j, const std::optional<LorentzFrame>& frame);

// {"kind": "ellipsoid" | "projected_subgradient" | "grid_oracle",
//  "resolution", "refine_rounds", "max_iters", "step_scale", "tol"}
SolverConfig solver_from_json(const Json& j);

// {"rule": "explicit", "terms": [...]} |
// {"rule": "affine", "start": [...], "step": [...], "N": 64} |
// {"rule": "geometric", "target": [...], "ratio": "1/2", "start": [...], "N": 64}
SequenceRule sequence_rule_from_json(const Json& j);

// Parameter access with ParseError on missing or ill-typed fields.
const Json& require_field(const Json& j, const char* key);
std::size_t size_field(const Json& j, const char* key, std::size_t fallback);
double number_field(const Json& j, const char* key, double fallback);

}  // namespace conekit
