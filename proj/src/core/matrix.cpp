#include "repdescent/matrix.hpp"

#include "repdescent/error.hpp"

#include <sstream>

namespace repdescent {

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, Cyclotomic(order)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::dimension_mismatch, "matrix entry count does not match shape");
  }
  order_ = entries_.empty() ? 1 : entries_.front().order();
  for (const auto& e : entries_) {
    if (e.order() != order_) throw Error(ErrorCode::order_mismatch, "matrix entries of mixed order");
  }
}

Matrix Matrix::identity(std::size_t n, unsigned order) {
  Matrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(order);
  return m;
}

Matrix Matrix::scalar(std::size_t n, const Cyclotomic& c) {
  Matrix m(n, n, c.order());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::inverse() const {
  if (!square()) throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n, order_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::invalid_argument, "matrix is singular");
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    }
    const Cyclotomic p = a(c, c).inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= p;
      inv(c, k) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Cyclotomic f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Cyclotomic Matrix::trace() const {
  if (!square()) throw Error(ErrorCode::dimension_mismatch, "trace of a non-square matrix");
  Cyclotomic t(order_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  auto s = scalar_value();
  return s && s->is_one();
}

std::optional<Cyclotomic> Matrix::scalar_value() const {
  if (!square() || rows_ == 0) return std::nullopt;
  const Cyclotomic& d = (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Cyclotomic& x = (*this)(r, c);
      if (r == c ? !(x == d) : !x.is_zero()) return std::nullopt;
    }
  }
  return d;
}

std::optional<Cyclotomic> Matrix::first_nonzero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return e;
  }
  return std::nullopt;
}

Matrix Matrix::lift(unsigned f) const {
  std::vector<Cyclotomic> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.lift(f));
  Matrix m(rows_, cols_, f);
  if (!out.empty()) m = Matrix(rows_, cols_, std::move(out));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::dimension_mismatch, "matrix sum shape");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::dimension_mismatch, "matrix difference shape");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Cyclotomic& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::dimension_mismatch, "matrix product shape " + std::to_string(a.rows_) + "x" +
                                                   std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                                                   "x" + std::to_string(b.cols_));
  }
  if (a.order_ != b.order_ && !a.entries_.empty() && !b.entries_.empty()) {
    throw Error(ErrorCode::order_mismatch, "matrix product of different cyclotomic orders");
  }
  Matrix p(a.rows_, b.cols_, a.order_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Cyclotomic& y = b(k, c);
        if (!y.is_zero()) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::order_mismatch, "kronecker of different orders");
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
      }
    }
  }
  return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::order_mismatch, "direct sum of different orders");
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return s;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).str();
  }
  out << "]";
  return out.str();
}

}  // namespace repdescent
