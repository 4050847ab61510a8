#include "conekit/linalg.hpp"

#include <cmath>
#include <sstream>

namespace conekit {

Vector::Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.backend() != coords_.front().backend()) {
      throw Error(Errc::kMixedBackend, "vector coordinates must share one backend");
    }
  }
}

Vector Vector::zeros(std::size_t dim, Backend backend) {
  return Vector(std::vector<Scalar>(dim, Scalar(0).to_backend(backend)));
}

Vector Vector::unit(std::size_t dim, std::size_t i, Backend backend) {
  std::vector<Scalar> c(dim, Scalar(0).to_backend(backend));
  c.at(i) = Scalar(1).to_backend(backend);
  return Vector(std::move(c));
}

Vector Vector::from_doubles(const std::vector<double>& values) {
  std::vector<Scalar> c;
  c.reserve(values.size());
  for (double v : values) c.push_back(Scalar::real(v));
  return Vector(std::move(c));
}

Vector Vector::parse(const std::vector<std::string>& entries) {
  std::vector<Scalar> c;
  c.reserve(entries.size());
  for (const auto& e : entries) c.push_back(Scalar::parse(e));
  return Vector(std::move(c));
}

Backend Vector::backend() const {
  return coords_.empty() ? Backend::kExact : coords_.front().backend();
}

Vector Vector::to_backend(Backend b) const {
  if (b == backend()) return *this;
  std::vector<Scalar> c;
  c.reserve(coords_.size());
  for (const auto& s : coords_) c.push_back(s.to_backend(b));
  return Vector(std::move(c));
}

std::vector<double> Vector::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& s : coords_) out.push_back(s.to_double());
  return out;
}

bool Vector::is_zero() const {
  for (const auto& s : coords_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

void require_same_dim(const Vector& a, const Vector& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::kDimensionMismatch, std::string(where) + ": dimensions " +
                                              std::to_string(a.dim()) + " and " +
                                              std::to_string(b.dim()));
  }
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(*this, o, "vector +");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_dim(*this, o, "vector -");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

Scalar dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "dot");
  Scalar s = Scalar(0).to_backend(a.backend());
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend backend)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0).to_backend(backend)) {}

Matrix Matrix::identity(std::size_t n, Backend backend) {
  Matrix m(n, n, backend);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1).to_backend(backend);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().dim(), cols.size(), cols.front().backend());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_dim(cols[c], cols.front(), "Matrix::from_columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  return from_columns(rows).transpose();
}

Backend Matrix::backend() const {
  return data_.empty() ? Backend::kExact : data_.front().backend();
}

Vector Matrix::row(std::size_t r) const {
  std::vector<Scalar> c(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return Vector(std::move(c));
}

Vector Matrix::col(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return Vector(std::move(out));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, backend());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.dim() != cols_) throw Error(Errc::kDimensionMismatch, "matrix-vector product");
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = Scalar(0).to_backend(v.backend());
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out.push_back(std::move(s));
  }
  return Vector(std::move(out));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (o.rows_ != cols_) throw Error(Errc::kDimensionMismatch, "matrix product");
  Matrix m(rows_, o.cols_, backend());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < o.cols_; ++c) {
      Scalar s = Scalar(0).to_backend(backend());
      for (std::size_t k = 0; k < cols_; ++k) s += (*this)(r, k) * o(k, c);
      m(r, c) = std::move(s);
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << row(r).to_string();
  }
  os << "]";
  return os.str();
}

SymMatrix::SymMatrix(Matrix m, const ToleranceContext& ctx) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(Errc::kDimensionMismatch, "symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      bool ok = m_.backend() == Backend::kExact
                    ? m_(i, j) == m_(j, i)
                    : std::fabs(m_(i, j).to_double() - m_(j, i).to_double()) <= ctx.abs_tol;
      if (!ok) {
        throw Error(Errc::kInvalidArgument, "matrix is not symmetric at (" + std::to_string(i) +
                                                "," + std::to_string(j) + ")");
      }
    }
  }
}

SymMatrix SymMatrix::diagonal(const std::vector<Scalar>& diag) {
  Backend b = diag.empty() ? Backend::kExact : diag.front().backend();
  Matrix m(diag.size(), diag.size(), b);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return SymMatrix(std::move(m));
}

Scalar SymMatrix::bilinear(const Vector& x, const Vector& y) const {
  if (x.dim() != dim() || y.dim() != dim()) {
    throw Error(Errc::kDimensionMismatch, "bilinear form of dimension " + std::to_string(dim()) +
                                              " applied to vectors of dimension " +
                                              std::to_string(x.dim()) + "/" + std::to_string(y.dim()));
  }
  Scalar s = Scalar(0).to_backend(x.backend());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar row = Scalar(0).to_backend(x.backend());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j].is_zero() && !m_(i, j).is_zero()) row += m_(i, j) * y[j];
    }
    s += x[i] * row;
  }
  return s;
}

namespace {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;
};

double max_abs(const Matrix& m) {
  double best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::fabs(m(r, c).to_double()));
  }
  return best;
}

// Row echelon form (reduced when `full` is set).
Echelon echelon(Matrix m, bool full, const ToleranceContext& ctx) {
  Echelon e;
  const bool exact = m.backend() == Backend::kExact;
  const double threshold = exact ? 0.0 : ctx.abs_tol * std::max(1.0, max_abs(m));
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    double best = threshold;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (exact) {
        if (!m(r, col).is_zero()) {
          pivot = r;
          break;
        }
      } else if (std::fabs(m(r, col).to_double()) > best) {
        best = std::fabs(m(r, col).to_double());
        pivot = r;
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      ++e.swaps;
    }
    const Scalar p = m(row, col);
    std::size_t start = full ? 0 : row + 1;
    for (std::size_t r = start; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col) / p;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    if (full) {
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= p;
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m, const ToleranceContext& ctx) {
  return echelon(m, false, ctx).pivot_cols.size();
}

std::vector<std::size_t> independent_columns(const Matrix& m, const ToleranceContext& ctx) {
  return echelon(m, false, ctx).pivot_cols;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::kDimensionMismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return Scalar(1).to_backend(m.backend());
  Echelon e = echelon(m, false, {});
  if (e.pivot_cols.size() < m.rows()) return Scalar(0).to_backend(m.backend());
  Scalar d = Scalar(e.swaps % 2 ? -1 : 1).to_backend(m.backend());
  for (std::size_t i = 0; i < m.rows(); ++i) d *= e.reduced(i, i);
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::kDimensionMismatch, "inverse of non-square matrix");
  Matrix aug(n, 2 * n, m.backend());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1).to_backend(m.backend());
  }
  Echelon e = echelon(std::move(aug), true, {});
  if (e.pivot_cols.size() < n || e.pivot_cols.back() >= n) return std::nullopt;
  Matrix inv(n, n, m.backend());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  return *inv * b;
}

std::vector<Vector> null_space(const Matrix& m) {
  Echelon e = echelon(m, true, {});
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(m.cols(), Scalar(0).to_backend(m.backend()));
    x[free] = Scalar(1).to_backend(m.backend());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      x[e.pivot_cols[i]] = -e.reduced(i, free);
    }
    basis.emplace_back(std::move(x));
  }
  return basis;
}

}  // namespace conekit
