#include "conekit/gram.hpp"

namespace conekit {

GramForm::GramForm(std::vector<Vector> basis, SymMatrix gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
  if (basis_.empty()) throw Error(Errc::kInvalidArgument, "empty basis");
  if (gram_.dim() != basis_.size()) {
    throw Error(Errc::kDimensionMismatch, "gram matrix size differs from basis size");
  }
  Matrix b = Matrix::from_columns(basis_);
  if (rank(b) != basis_.size()) throw Error(Errc::kDependentBasis, "basis is linearly dependent");

  rows_ = independent_columns(b.transpose());
  Matrix block(rows_.size(), basis_.size(), b.backend());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) block(i, j) = b(rows_[i], j);
  }
  block_inverse_ = *inverse(block);

  if (full_rank()) {
    // rows_ is then 0..n-1 and block_inverse_ = B^{-1}.
    Matrix m = block_inverse_.transpose() * gram_.matrix() * block_inverse_;
    // Float round-off may break exact symmetry; symmetrize.
    if (m.backend() == Backend::kFloat) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
          Scalar avg = (m(i, j) + m(j, i)) * Scalar::real(0.5);
          m(i, j) = avg;
          m(j, i) = avg;
        }
      }
    }
    metric_ = SymMatrix(std::move(m));
  }
}

GramForm GramForm::minkowski(std::size_t spatial_dim) {
  std::vector<Scalar> diag(spatial_dim + 1, Scalar(-1));
  diag[0] = Scalar(1);
  return standard(SymMatrix::diagonal(diag));
}

GramForm GramForm::standard(SymMatrix gram) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < gram.dim(); ++i) {
    basis.push_back(Vector::unit(gram.dim(), i, gram.backend()));
  }
  return GramForm(std::move(basis), std::move(gram));
}

const SymMatrix& GramForm::metric() const {
  if (!full_rank()) {
    throw Error(Errc::kDimensionMismatch, "basis does not span the ambient space");
  }
  return metric_;
}

Vector GramForm::coordinates(const Vector& x) const {
  if (x.dim() != ambient_dim()) {
    throw Error(Errc::kDimensionMismatch, "vector of dimension " + std::to_string(x.dim()) +
                                              " in a form on R^" + std::to_string(ambient_dim()));
  }
  std::vector<Scalar> sub;
  sub.reserve(rows_.size());
  for (auto r : rows_) sub.push_back(x[r]);
  Vector c = block_inverse_ * Vector(std::move(sub));
  if (!full_rank()) {
    Vector back = Vector::zeros(ambient_dim(), x.backend());
    for (std::size_t j = 0; j < basis_.size(); ++j) back += basis_[j] * c[j];
    bool in_span = x.is_exact() ? back == x : true;
    if (!in_span) throw Error(Errc::kDimensionMismatch, "vector not in the span of the basis");
  }
  return c;
}

Scalar GramForm::inner(const Vector& x, const Vector& y) const {
  if (full_rank()) {
    require_same_dim(x, y, "GramForm::inner");
    if (x.dim() != ambient_dim()) {
      throw Error(Errc::kDimensionMismatch, "vector of dimension " + std::to_string(x.dim()) +
                                                " in a form on R^" + std::to_string(ambient_dim()));
    }
    return metric_.bilinear(x, y);
  }
  return gram_.bilinear(coordinates(x), coordinates(y));
}

}  // namespace conekit
