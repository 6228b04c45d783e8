#pragma once

// Totally positive kernel: elementary bidiagonal (corner-cutting) factors,
// the stochastic bidiagonal factorization and its inverse direction via
// Neville elimination, TP certification, checkerboard conjugation, and exact
// inverses.
//
// Index conventions follow the matrix literature: factors are 1-indexed.
// Upper(i, l) is the identity except entries (i-1,i-1) = 1-l, (i-1,i) = l;
// Lower(i, l) is the identity except entries (i,i-1) = l, (i,i) = 1-l.
// Both are row-stochastic.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpbasis/matrix.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

enum class FactorSide { Lower, Upper };

struct ElementaryFactor {
  FactorSide side = FactorSide::Lower;
  int i = 2;  // 2..n
  Rational lambda;

  ElementaryFactor() = default;
  ElementaryFactor(FactorSide s, int idx, Rational l);
};

struct not_stochastic_tp_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RatMatrix elementary_matrix(const ElementaryFactor& f, int n);

// Closed form of J E^{-1} J for an elementary factor E: identity except a
// 1/(1-l) diagonal entry with l/(1-l) beside it.
RatMatrix elementary_inverse_checkerboard(const ElementaryFactor& f, int n);

// The full stochastic factorization: n(n-1) factors in fixed order, lower
// factors grouped by subdiagonal (outermost corner first), then upper factors
// grouped by superdiagonal (nearest first, each group running bottom-up).
class BidiagonalFactorization {
 public:
  explicit BidiagonalFactorization(int n);

  int n() const { return n_; }
  const std::vector<ElementaryFactor>& factors() const { return factors_; }

  // multiplier attached to off-diagonal position (i, j), 1-indexed, i != j
  const Rational& alpha(int i, int j) const;
  Rational& alpha(int i, int j);

  Json to_json() const;
  static BidiagonalFactorization from_json(const Json& j);

  friend bool operator==(const BidiagonalFactorization& x, const BidiagonalFactorization& y) {
    return x.n_ == y.n_ && x.alphas_ == y.alphas_;
  }

  // resync the factor list after writing alphas directly
  void rebuild();

 private:
  int n_ = 0;
  std::vector<Rational> alphas_;  // row-major n*n, off-diagonal slots used
  std::vector<ElementaryFactor> factors_;
};

// Multiply the factors out; the result is nonsingular, row-stochastic, TP.
RatMatrix compose(const BidiagonalFactorization& f);

// Invert compose by two-sided Neville elimination. Requires a square,
// row-stochastic, nonsingular TP matrix.
BidiagonalFactorization factorize(const RatMatrix& a);

// Total positivity test: two-sided Neville elimination certification with
// nonnegative multipliers and pivots, run on the matrix and its transpose.
bool is_tp(const RatMatrix& m);
bool is_tp(const DecMatrix& m, const PrecisionConfig& cfg);

template <class T>
Matrix<T> checkerboard(const Matrix<T>& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = ((i + j) % 2 == 0) ? m(i, j) : -m(i, j);
  return r;
}

// Fraction-free (Bareiss) elimination on the integer-scaled matrix.
Rational determinant(const RatMatrix& a);
RatMatrix inverse(const RatMatrix& a);  // throws singular_matrix_error
DecMatrix inverse(const DecMatrix& a, const PrecisionConfig& cfg);

}  // namespace tpb
