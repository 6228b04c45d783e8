#include "tpbasis/tpcore.hpp"

#include <algorithm>

namespace tpb {

ElementaryFactor::ElementaryFactor(FactorSide s, int idx, Rational l)
    : side(s), i(idx), lambda(std::move(l)) {
  if (i < 2) throw std::invalid_argument("elementary factor index below 2");
  if (sgn(lambda) < 0 || lambda >= 1)
    throw std::invalid_argument("elementary factor multiplier outside [0,1)");
}

RatMatrix elementary_matrix(const ElementaryFactor& f, int n) {
  if (f.i > n) throw std::invalid_argument("elementary factor index exceeds size");
  RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(n));
  std::size_t i = static_cast<std::size_t>(f.i) - 1;  // 0-indexed row i of Lower
  if (f.side == FactorSide::Lower) {
    m(i, i - 1) = f.lambda;
    m(i, i) = 1 - f.lambda;
  } else {
    m(i - 1, i - 1) = 1 - f.lambda;
    m(i - 1, i) = f.lambda;
  }
  return m;
}

RatMatrix elementary_inverse_checkerboard(const ElementaryFactor& f, int n) {
  if (f.i > n) throw std::invalid_argument("elementary factor index exceeds size");
  RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(n));
  Rational d = Rational(1) / (1 - f.lambda);
  Rational o = f.lambda / (1 - f.lambda);
  std::size_t i = static_cast<std::size_t>(f.i) - 1;
  if (f.side == FactorSide::Lower) {
    m(i, i) = d;
    m(i, i - 1) = o;
  } else {
    m(i - 1, i - 1) = d;
    m(i - 1, i) = o;
  }
  return m;
}

BidiagonalFactorization::BidiagonalFactorization(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("factorization size below 1");
  alphas_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
  rebuild();
}

const Rational& BidiagonalFactorization::alpha(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
    throw std::invalid_argument("alpha index outside off-diagonal range");
  return alphas_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

Rational& BidiagonalFactorization::alpha(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
    throw std::invalid_argument("alpha index outside off-diagonal range");
  return alphas_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void BidiagonalFactorization::rebuild() {
  factors_.clear();
  factors_.reserve(static_cast<std::size_t>(n_) * (n_ - 1));
  // lower groups, outermost subdiagonal first, each group top-down
  for (int d = n_ - 1; d >= 1; --d)
    for (int k = d + 1; k <= n_; ++k)
      factors_.emplace_back(FactorSide::Lower, k, alpha(k, k - d));
  // upper groups, first superdiagonal first, each group bottom-up
  for (int d = 1; d <= n_ - 1; ++d)
    for (int k = n_; k >= d + 1; --k)
      factors_.emplace_back(FactorSide::Upper, k, alpha(k - d, k));
}

Json BidiagonalFactorization::to_json() const {
  Json factors = Json::array();
  for (const auto& f : factors_)
    factors.push_back(Json{{"side", f.side == FactorSide::Lower ? "L" : "U"},
                           {"i", f.i},
                           {"lambda", to_string(f.lambda)}});
  return Json{{"n", n_}, {"factors", std::move(factors)}};
}

BidiagonalFactorization BidiagonalFactorization::from_json(const Json& j) {
  BidiagonalFactorization out(j.at("n").get<int>());
  int n = out.n_;
  // alpha slot per canonical position, same order as rebuild()
  std::vector<std::pair<int, int>> slots;
  for (int d = n - 1; d >= 1; --d)
    for (int k = d + 1; k <= n; ++k) slots.emplace_back(k, k - d);
  for (int d = 1; d <= n - 1; ++d)
    for (int k = n; k >= d + 1; --k) slots.emplace_back(k - d, k);

  const auto& factors = j.at("factors");
  if (factors.size() != slots.size())
    throw std::invalid_argument("factor list has wrong length");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    FactorSide side =
        f.at("side").get<std::string>() == "L" ? FactorSide::Lower : FactorSide::Upper;
    if (side != out.factors_[k].side || f.at("i").get<int>() != out.factors_[k].i)
      throw std::invalid_argument("factor list out of canonical order");
    out.alpha(slots[k].first, slots[k].second) =
        parse_rational(f.at("lambda").get<std::string>());
  }
  out.rebuild();
  return out;
}

RatMatrix compose(const BidiagonalFactorization& f) {
  std::size_t n = static_cast<std::size_t>(f.n());
  RatMatrix m = RatMatrix::identity(n);
  for (const auto& e : f.factors()) {
    std::size_t i = static_cast<std::size_t>(e.i) - 1;
    const Rational& l = e.lambda;
    if (sgn(l) == 0) continue;
    Rational oml = 1 - l;
    if (e.side == FactorSide::Lower) {
      // right-multiply by Lower(i+1, l): touches columns i-1 and i
      for (std::size_t r = 0; r < n; ++r) {
        m(r, i - 1) += l * m(r, i);
        m(r, i) *= oml;
      }
    } else {
      for (std::size_t r = 0; r < n; ++r) {
        m(r, i) += l * m(r, i - 1);
        m(r, i - 1) *= oml;
      }
    }
  }
  return m;
}

namespace {

void require_stochastic(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) < 0)
        throw not_stochastic_tp_error("matrix has a negative entry");
      s += a(i, j);
    }
    if (s != 1) throw not_stochastic_tp_error("matrix rows do not sum to 1");
  }
}

}  // namespace

BidiagonalFactorization factorize(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("factorization needs a square matrix");
  int n = static_cast<int>(a.rows());
  if (n < 1) throw std::invalid_argument("factorization needs size >= 1");
  require_stochastic(a);

  BidiagonalFactorization out(n);
  RatMatrix m = a;

  // Lower sweep: peel subdiagonals from the corner inward. Each multiplier is
  // the adjacent-row Neville quotient; the (1-l) division keeps rows
  // stochastic throughout.
  for (int d = n - 1; d >= 1; --d) {
    for (int k = d + 1; k <= n; ++k) {
      std::size_t r = static_cast<std::size_t>(k) - 1;      // row k
      std::size_t c = static_cast<std::size_t>(k - d) - 1;  // column k-d
      const Rational& num = m(r, c);
      if (sgn(num) == 0) continue;
      const Rational& den = m(r - 1, c);
      if (sgn(den) == 0)
        throw not_stochastic_tp_error("nonzero entry under a zero during elimination");
      Rational l = num / den;
      if (sgn(l) < 0 || l >= 1)
        throw not_stochastic_tp_error("elimination multiplier outside [0,1); matrix is not stochastic TP or is singular");
      Rational oml = 1 - l;
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
        m(r, j) = (m(r, j) - l * m(r - 1, j)) / oml;
      out.alpha(k, k - d) = l;
    }
  }

  // Upper sweep: peel superdiagonals outermost first with adjacent-column
  // operations, top entry of each diagonal first.
  for (int d = n - 1; d >= 1; --d) {
    for (int j = 1; j <= n - d; ++j) {
      std::size_t r = static_cast<std::size_t>(j) - 1;
      std::size_t c = static_cast<std::size_t>(j + d) - 1;  // column being zeroed
      const Rational& num = m(r, c);
      if (sgn(num) == 0) continue;
      Rational den_plus_num = m(r, c - 1) + num;
      if (sgn(den_plus_num) == 0)
        throw not_stochastic_tp_error("degenerate column pair during elimination");
      Rational l = num / den_plus_num;
      if (sgn(l) < 0 || l >= 1)
        throw not_stochastic_tp_error("elimination multiplier outside [0,1); matrix is not stochastic TP or is singular");
      Rational ratio = l / (1 - l);
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        Rational old = m(i, c - 1);
        m(i, c - 1) = old / (1 - l);
        m(i, c) -= ratio * old;
      }
      out.alpha(j, j + d) = l;
    }
  }

  if (m != RatMatrix::identity(static_cast<std::size_t>(n)))
    throw not_stochastic_tp_error("elimination residue is not the identity");
  out.rebuild();
  return out;
}

namespace {

// One-sided Neville certification pass, zeroing below the main diagonal with
// adjacent-row operations. Rows that are entirely zero may sink past a
// nonzero row (relocating a null row never changes total positivity); any
// other blocked pivot, or a negative multiplier, refutes TP.
template <class T, class IsZero, class IsNeg>
bool neville_lower_pass(Matrix<T>& m, const IsZero& is_zero, const IsNeg& is_neg) {
  std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = rows; i-- > j + 1;) {
      if (is_zero(m(i, j))) continue;
      if (is_zero(m(i - 1, j))) {
        bool null_row = true;
        for (std::size_t k = j; k < cols && null_row; ++k)
          if (!is_zero(m(i - 1, k))) null_row = false;
        if (!null_row) return false;
        for (std::size_t k = 0; k < cols; ++k) std::swap(m(i - 1, k), m(i, k));
        continue;
      }
      T mult = m(i, j) / m(i - 1, j);
      if (is_neg(mult)) return false;
      m(i, j) = T(0);
      for (std::size_t k = j + 1; k < cols; ++k) m(i, k) -= mult * m(i - 1, k);
    }
  }
  return true;
}

template <class T, class IsZero, class IsNeg>
bool neville_certify(Matrix<T> m, const IsZero& is_zero, const IsNeg& is_neg) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (is_neg(m(i, j))) return false;
  if (!neville_lower_pass(m, is_zero, is_neg)) return false;
  Matrix<T> t = m.transpose();
  if (!neville_lower_pass(t, is_zero, is_neg)) return false;
  for (std::size_t i = 0; i < std::min(t.rows(), t.cols()); ++i)
    if (is_neg(t(i, i))) return false;
  return true;
}

}  // namespace

bool is_tp(const RatMatrix& m) {
  auto is_zero = [](const Rational& x) { return sgn(x) == 0; };
  auto is_neg = [](const Rational& x) { return sgn(x) < 0; };
  return neville_certify(m, is_zero, is_neg) &&
         neville_certify(m.transpose(), is_zero, is_neg);
}

bool is_tp(const DecMatrix& m, const PrecisionConfig& cfg) {
  Decimal tol = comparison_tolerance(cfg);
  auto is_zero = [tol](const Decimal& x) { return abs(x) <= tol; };
  auto is_neg = [tol](const Decimal& x) { return x < -tol; };
  return neville_certify(m, is_zero, is_neg) &&
         neville_certify(m.transpose(), is_zero, is_neg);
}

namespace {

// Integer-scaled fraction-free forward elimination shared by determinant and
// inverse: returns false when singular. On return u is upper triangular with
// the Bareiss pivots on its diagonal and w holds the transformed right side.
bool bareiss_forward(std::vector<std::vector<Integer>>& u,
                     std::vector<std::vector<Integer>>* w, int& det_sign) {
  std::size_t n = u.size();
  det_sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(u[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(u[p][k]) == 0) ++p;
      if (p == n) return false;
      std::swap(u[k], u[p]);
      if (w) std::swap((*w)[k], (*w)[p]);
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        u[i][j] = (u[k][k] * u[i][j] - u[i][k] * u[k][j]) / prev;
      if (w)
        for (std::size_t j = 0; j < (*w)[i].size(); ++j)
          (*w)[i][j] = (u[k][k] * (*w)[i][j] - u[i][k] * (*w)[k][j]) / prev;
      u[i][k] = 0;
    }
    prev = u[k][k];
  }
  return true;
}

// row-wise denominator clearing; li collects the scale of each row
std::vector<std::vector<Integer>> integer_scale(const RatMatrix& a, std::vector<Integer>& li) {
  std::size_t n = a.rows();
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n));
  li.assign(n, Integer(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(li[i].get_mpz_t(), li[i].get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a(i, j) * Rational(li[i]);
      v.canonicalize();
      u[i][j] = v.get_num();
    }
  }
  return u;
}

}  // namespace

Rational determinant(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  std::vector<Integer> li;
  auto u = integer_scale(a, li);
  int sign = 1;
  if (!bareiss_forward(u, nullptr, sign)) return Rational(0);
  Rational det(u[n - 1][n - 1]);
  for (const auto& l : li) det /= Rational(l);
  det.canonicalize();
  return sign < 0 ? -det : det;
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<Integer> li;
  auto u = integer_scale(a, li);
  // right side starts as diag(li): u x = li * I solves a x = I
  std::vector<std::vector<Integer>> w(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = li[i];
  int sign = 1;
  if (!bareiss_forward(u, &w, sign)) throw singular_matrix_error("matrix is singular");

  RatMatrix x(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Rational s(w[i][col]);
      for (std::size_t j = i + 1; j < n; ++j) s -= Rational(u[i][j]) * x(j, col);
      x(i, col) = s / Rational(u[i][i]);
      x(i, col).canonicalize();
    }
  }
  return x;
}

DecMatrix inverse(const DecMatrix& a, const PrecisionConfig& cfg) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = a.rows();
  DecMatrix m = a;
  DecMatrix x(n, n, Decimal(cfg));
  for (std::size_t i = 0; i < n; ++i) x(i, i) = Decimal(1L, cfg);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(p, k))) p = i;
    if (m(p, k).is_zero()) throw singular_matrix_error("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(x(k, j), x(p, j));
      }
    Decimal piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      x(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      Decimal f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        x(i, j) -= f * x(k, j);
      }
    }
  }
  return x;
}

}  // namespace tpb
