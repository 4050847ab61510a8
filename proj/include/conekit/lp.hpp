#pragma once

#include <optional>
#include <vector>

#include "conekit/linalg.hpp"

namespace conekit {

// Exact feasibility of { theta >= 0 : A theta = b } by a phase-one simplex
// over Q with Bland's anti-cycling rule. Float inputs are converted to their
// exact binary values first. Returns a feasible theta (basic solution) or
// nullopt when the system is infeasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(const Matrix& a, const Vector& b);

}  // namespace conekit
