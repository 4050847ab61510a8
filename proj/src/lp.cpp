#include "conekit/lp.hpp"

namespace conekit {

std::optional<std::vector<Rational>> find_nonnegative_solution(const Matrix& a, const Vector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.dim() != m) throw Error(Errc::kDimensionMismatch, "LP right-hand side");

  // Tableau columns: n structural, m artificial, then the rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational rhs = b[i].to_backend(Backend::kExact).rational();
    int flip = sgn(rhs) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a(i, j).to_backend(Backend::kExact).rational() * flip;
    }
    t[i][n + i] = 1;
    t[i][width - 1] = rhs * flip;
    basis[i] = n + i;
  }

  // Reduced costs of the phase-one objective sum(artificials).
  std::vector<Rational> cost(width, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[width - 1] -= t[i][width - 1];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) break;

    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (sgn(cost[width - 1]) != 0) return std::nullopt;
  std::vector<Rational> theta(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) theta[basis[i]] = t[i][width - 1];
  }
  return theta;
}

}  // namespace conekit
