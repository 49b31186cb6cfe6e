#include "yh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace yh {

Matrix::Matrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycScalar(order)) {}

Matrix Matrix::identity(std::size_t n, int order) {
  Matrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(order, 1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& c : data_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<CycScalar> Matrix::scalar_multiple_of_identity() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const CycScalar c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? (*this)(i, j) != c : !(*this)(i, j).is_zero()) return std::nullopt;
    }
  }
  return c;
}

CycScalar Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  CycScalar t(order_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const CycScalar& s) {
  for (auto& c : data_) c *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix out(a.rows_, b.cols_, a.order_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CycScalar determinant(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const int order = a.order();
  if (n == 0) return CycScalar(order, 1);
  bool negate = false;
  CycScalar prev(order, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return CycScalar(order);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = CycScalar(order);
    }
    prev = a(k, k);
  }
  CycScalar det = a(n - 1, n - 1);
  return negate ? -det : det;
}

std::size_t rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const CycScalar inv = a(r, col).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const CycScalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n, a.order());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(col, j), m(p, j));
      std::swap(inv(col, j), inv(p, j));
    }
    const CycScalar pivot_inv = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= pivot_inv;
      inv(col, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const CycScalar factor = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

}  // namespace yh
