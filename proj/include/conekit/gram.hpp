#pragma once

#include <vector>

#include "conekit/linalg.hpp"

namespace conekit {

// A symmetric bilinear form on the span of `basis`, stored as its Gram
// matrix gram(i,j) = <b_i, b_j>. Vectors passed to inner() are in ambient
// coordinates and must lie in that span.
class GramForm {
 public:
  GramForm() = default;
  GramForm(std::vector<Vector> basis, SymMatrix gram);

  // Standard basis of R^{1+n} with gram diag(1, -1, ..., -1).
  static GramForm minkowski(std::size_t spatial_dim);
  // Standard basis with the given matrix.
  static GramForm standard(SymMatrix gram);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return basis_.empty() ? 0 : basis_.front().dim(); }
  bool full_rank() const { return dim() == ambient_dim(); }
  Backend backend() const { return gram_.backend(); }

  const std::vector<Vector>& basis() const { return basis_; }
  const SymMatrix& gram() const { return gram_; }

  // Matrix of the form in ambient coordinates, B^{-T} G B^{-1}. Only for a
  // basis of the whole ambient space.
  const SymMatrix& metric() const;

  // Coordinates of x in the basis; throws DimensionMismatch if x is not in
  // the span.
  Vector coordinates(const Vector& x) const;

  Scalar inner(const Vector& x, const Vector& y) const;
  Scalar quad(const Vector& x) const { return inner(x, x); }

  friend bool operator==(const GramForm& a, const GramForm& b) {
    return a.basis_ == b.basis_ && a.gram_ == b.gram_;
  }

 private:
  std::vector<Vector> basis_;
  SymMatrix gram_;
  SymMatrix metric_;
  // Rows of the basis matrix that form an invertible block, and its inverse.
  std::vector<std::size_t> rows_;
  Matrix block_inverse_;
};

}  // namespace conekit
