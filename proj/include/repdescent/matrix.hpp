#pragma once

#include "repdescent/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace repdescent {

/// Dense matrix over Q(zeta_e); every entry has the same order e.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, unsigned order);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

  static Matrix identity(std::size_t n, unsigned order);
  static Matrix scalar(std::size_t n, const Cyclotomic& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }
  bool square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& entries() const { return entries_; }

  Matrix transpose() const;
  /// Throws ErrorCode::invalid_argument when singular.
  Matrix inverse() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_identity() const;
  /// c when the matrix equals c * identity.
  std::optional<Cyclotomic> scalar_value() const;
  /// First nonzero entry in row-major order.
  std::optional<Cyclotomic> first_nonzero() const;
  Matrix lift(unsigned f) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Cyclotomic& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Cyclotomic& c) { return a *= c; }
  friend Matrix operator*(const Cyclotomic& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned order_ = 1;
  std::vector<Cyclotomic> entries_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace repdescent
