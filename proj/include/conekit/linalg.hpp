#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "conekit/numerics.hpp"

namespace conekit {

// Coordinates in R^n with a single backend shared by every entry.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> coords);
  Vector(std::initializer_list<Scalar> coords) : Vector(std::vector<Scalar>(coords)) {}

  static Vector zeros(std::size_t dim, Backend backend = Backend::kExact);
  static Vector unit(std::size_t dim, std::size_t i, Backend backend = Backend::kExact);
  static Vector from_doubles(const std::vector<double>& values);
  static Vector parse(const std::vector<std::string>& entries);

  std::size_t dim() const { return coords_.size(); }
  Backend backend() const;
  bool is_exact() const { return backend() == Backend::kExact; }
  Vector to_backend(Backend b) const;

  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  std::vector<double> to_doubles() const;

  bool is_zero() const;
  std::string to_string() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Scalar& s) { return a *= s; }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }

  // Componentwise equality (exact for rationals, raw for floats).
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  std::vector<Scalar> coords_;
};

void require_same_dim(const Vector& a, const Vector& b, const char* where);

// Euclidean coordinate dot product.
Scalar dot(const Vector& a, const Vector& b);

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Backend backend = Backend::kExact);
  static Matrix identity(std::size_t n, Backend backend = Backend::kExact);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Backend backend() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;

  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Symmetric matrix: symmetry is checked exactly for rationals and within
// ctx.abs_tol for floats.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Matrix m, const ToleranceContext& ctx = {});
  static SymMatrix diagonal(const std::vector<Scalar>& diag);

  std::size_t dim() const { return m_.rows(); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix& matrix() const { return m_; }
  Backend backend() const { return m_.backend(); }

  // x^T S y
  Scalar bilinear(const Vector& x, const Vector& y) const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

// Exact Gaussian elimination helpers. Float matrices use partial pivoting
// with pivot threshold ctx.abs_tol times the largest entry.
std::size_t rank(const Matrix& m, const ToleranceContext& ctx = {});
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Indices of a maximal linearly independent subset of the columns, chosen
// greedily left to right.
std::vector<std::size_t> independent_columns(const Matrix& m, const ToleranceContext& ctx = {});
// Solution of m x = b when m is square and invertible.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Basis of the null space { x : m x = 0 } (exact backend).
std::vector<Vector> null_space(const Matrix& m);

}  // namespace conekit
