#include "logsplit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logsplit/error.hpp"

namespace logsplit {

namespace {

void check_dim(std::size_t n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
}

void check_same(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + "x" +
                    std::to_string(b.dim()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n) {
  check_dim(n);
  data_.assign(n * n, ComplexScalar{});
}

Matrix::Matrix(std::initializer_list<std::initializer_list<ComplexScalar>> rows) : n_(rows.size()) {
  check_dim(n_);
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexScalar::one();
  return m;
}

Matrix Matrix::diagonal(const std::vector<ComplexScalar>& diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_values(std::size_t n, const std::vector<std::complex<double>>& row_major) {
  Matrix m(n);
  if (row_major.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "entry count does not match n*n");
  for (std::size_t k = 0; k < row_major.size(); ++k) m.data_[k] = ComplexScalar{row_major[k]};
  return m;
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (const auto& x : data_) best = std::max(best, x.abs());
  return best;
}

double Matrix::frobenius() const {
  double sum = 0.0;
  for (const auto& x : data_) sum += std::norm(x.value());
  return std::sqrt(sum);
}

bool Matrix::all_exact_cartesian() const {
  return std::all_of(data_.begin(), data_.end(), [](const ComplexScalar& x) { return x.exact_cartesian().has_value(); });
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_exact_zero() && (*this)(i, j).value() != std::complex<double>{}) return false;
  return true;
}

bool Matrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!(*this)(i, j).is_exact_zero() && (*this)(i, j).value() != std::complex<double>{}) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ComplexScalar acc;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

namespace {

// Index of the pivot row for column `col`: largest modulus among rows
// >= col, ignoring exact zeros. Returns n when the column is exactly zero.
std::size_t pick_pivot(const Matrix& m, std::size_t col) {
  const std::size_t n = m.dim();
  std::size_t best = n;
  double best_abs = -1.0;
  for (std::size_t r = col; r < n; ++r) {
    if (m(r, col).is_exact_zero()) continue;
    if (m(r, col).abs() > best_abs) {
      best_abs = m(r, col).abs();
      best = r;
    }
  }
  return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.dim(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

ComplexScalar determinant(const Matrix& a) {
  Matrix m = a;
  const std::size_t n = m.dim();
  ComplexScalar det = ComplexScalar::one();
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pick_pivot(m, col);
    if (p == n || m(p, col).value() == std::complex<double>{}) return ComplexScalar{};
    if (p != col) {
      swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    const ComplexScalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_exact_zero()) continue;
      const ComplexScalar factor = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

Matrix mat_inverse(const Matrix& a, double tol) {
  const ComplexScalar det = determinant(a);
  if (det.is_exact_zero() || (!det.is_exact() && det.abs() <= tol)) {
    throw Error(ErrorCode::SingularMatrix, "|det| = " + std::to_string(det.abs()) + " at tolerance " + std::to_string(tol));
  }
  const std::size_t n = a.dim();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pick_pivot(m, col);
    if (p == n) throw Error(ErrorCode::SingularMatrix, "zero pivot column");
    if (p != col) {
      swap_rows(m, p, col);
      swap_rows(inv, p, col);
    }
    const ComplexScalar scale = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_exact_zero()) continue;
      const ComplexScalar factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= factor * m(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Upper Hessenberg form by stabilized elementary similarities (row pivoting
// keeps every multiplier at most 1 in modulus). Uses only field operations,
// so exact inputs stay exact.
Matrix hessenberg(Matrix h) {
  const std::size_t n = h.dim();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    for (std::size_t i = m + 1; i < n; ++i)
      if (std::abs(h.value(i, m - 1)) > std::abs(h.value(pivot, m - 1))) pivot = i;
    if (h(pivot, m - 1).is_exact_zero() || std::abs(h.value(pivot, m - 1)) == 0.0) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, pivot), h(i, m));
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1).is_exact_zero()) continue;
      const ComplexScalar y = h(i, m - 1) / h(m, m - 1);
      for (std::size_t j = m; j < n; ++j) h(i, j) = h(i, j) - y * h(m, j);
      h(i, m - 1) = ComplexScalar{};
      for (std::size_t r = 0; r < n; ++r) h(r, m) = h(r, m) + y * h(r, i);
    }
  }
  return h;
}

}  // namespace

std::vector<ComplexScalar> char_poly(const Matrix& a) {
  // La Budde recurrence on the Hessenberg form H, 1-based:
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}.
  // Polynomials are stored lowest degree first.
  const std::size_t n = a.dim();
  const Matrix h = hessenberg(a);
  std::vector<std::vector<ComplexScalar>> p(n + 1);
  p[0] = {ComplexScalar::one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<ComplexScalar> next(k + 1);
    for (std::size_t d = 0; d < k; ++d) {
      next[d + 1] = next[d + 1] + p[k - 1][d];
      next[d] = next[d] - h(k - 1, k - 1) * p[k - 1][d];
    }
    ComplexScalar chain = ComplexScalar::one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      chain = chain * h(i, i - 1);
      if (chain.is_exact_zero()) break;
      const ComplexScalar w = h(i - 1, k - 1) * chain;
      if (w.is_exact_zero()) continue;
      for (std::size_t d = 0; d < i; ++d) next[d] = next[d] - w * p[i - 1][d];
    }
    p[k] = std::move(next);
  }
  return {p[n].rbegin(), p[n].rend()};
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  check_same(a, b);
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) best = std::max(best, std::abs(a.value(i, j) - b.value(i, j)));
  return best;
}

}  // namespace logsplit
