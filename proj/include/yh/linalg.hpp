#ifndef YH_LINALG_HPP
#define YH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "yh/scalar.hpp"

namespace yh {

/// Dense row-major matrix over Q(zeta_r).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int order);
  static Matrix identity(std::size_t n, int order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }

  CycScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  // If the matrix is c * I, returns c.
  std::optional<CycScalar> scalar_multiple_of_identity() const;
  CycScalar trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator*=(const CycScalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycScalar& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 1;
  std::vector<CycScalar> data_;
};

// Fraction-free (Bareiss) elimination; exact.
CycScalar determinant(Matrix a);
std::size_t rank(Matrix a);
// Nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);
// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace yh

#endif  // YH_LINALG_HPP
