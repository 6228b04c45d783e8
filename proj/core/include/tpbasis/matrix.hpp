#pragma once

// Small dense matrices over either scalar backend (Rational or Decimal).
// Sizes here are desk-scale; clarity over blocking.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tpbasis/decimal.hpp"
#include "tpbasis/rational.hpp"

namespace tpb {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero_entry(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xik * y(k, j);
      }
    return p;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix difference shape mismatch");
    Matrix d(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) d.a_[i] = x.a_[i] - y.a_[i];
    return d;
  }

  std::vector<T> row_sums() const {
    std::vector<T> s(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
    return s;
  }

 private:
  static bool is_zero_entry(const Rational& x) { return sgn(x) == 0; }
  static bool is_zero_entry(const Decimal& x) { return x.is_zero(); }
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using DecMatrix = Matrix<Decimal>;

inline DecMatrix to_decimal(const RatMatrix& m, const PrecisionConfig& cfg) {
  DecMatrix d(m.rows(), m.cols(), Decimal(cfg));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = Decimal(m(i, j), cfg);
  return d;
}

// Entries of a Decimal matrix are dyadic rationals; this is exact.
inline RatMatrix to_exact_rational(const DecMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_exact_rational();
  return r;
}

template <class T>
Matrix<T> entrywise_abs(const Matrix<T>& m) {
  using tpb::abs;
  using std::abs;
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = abs(m(i, j));
  return r;
}

// true when x >= y entrywise
template <class T>
bool entrywise_geq(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) < y(i, j)) return false;
  return true;
}

inline Decimal norm_inf(const DecMatrix& m) {
  Decimal best(0L);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Decimal s(0L);
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    if (s > best) best = s;
  }
  return best;
}

inline Rational norm_inf(const RatMatrix& m) {
  Rational best(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    if (s > best) best = s;
  }
  return best;
}

}  // namespace tpb
