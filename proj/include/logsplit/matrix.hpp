#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "logsplit/complex_scalar.hpp"

namespace logsplit {

inline constexpr std::size_t kMaxDimension = 8;

/// Dense square matrix of ComplexScalar, 1 <= n <= 8, row-major.
class Matrix {
 public:
  /// n x n exact zero matrix. Throws DimensionMismatch outside [1, 8].
  explicit Matrix(std::size_t n);
  /// Rows must all have the same length as the number of rows.
  Matrix(std::initializer_list<std::initializer_list<ComplexScalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<ComplexScalar>& diag);
  static Matrix from_values(std::size_t n, const std::vector<std::complex<double>>& row_major);

  std::size_t dim() const noexcept { return n_; }

  ComplexScalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ComplexScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::complex<double> value(std::size_t i, std::size_t j) const { return data_[i * n_ + j].value(); }

  /// Largest entry modulus.
  double max_abs() const;
  double frobenius() const;
  bool all_exact_cartesian() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

 private:
  std::size_t n_;
  std::vector<ComplexScalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Determinant by elimination with partial pivoting; exact for exact input.
ComplexScalar determinant(const Matrix& a);

/// Gauss-Jordan inverse. Throws SingularMatrix when the determinant is an
/// exact zero or, for inexact input, when |det| <= tol.
Matrix mat_inverse(const Matrix& a, double tol);

/// Coefficients of det(xI - a), leading 1 first (Hessenberg reduction,
/// then the La Budde recurrence).
/// Exact whenever every entry is an exact Gaussian rational.
std::vector<ComplexScalar> char_poly(const Matrix& a);

/// max |a_ij - b_ij|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace logsplit
