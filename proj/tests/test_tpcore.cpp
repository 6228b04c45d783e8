// Bidiagonal factor algebra, the stochastic factorization in both directions,
// TP certification against an exhaustive minor check, and exact determinants
// and inverses. The minor oracle uses its own cofactor-expansion determinant
// so nothing here trusts the elimination code it is checking.

#include <cstddef>
#include <vector>

#include "doctest.h"
#include "tpbasis/bases.hpp"
#include "tpbasis/collocation.hpp"
#include "tpbasis/harness.hpp"
#include "tpbasis/matrix.hpp"
#include "tpbasis/random.hpp"
#include "tpbasis/tpcore.hpp"

using tpb::BidiagonalFactorization;
using tpb::ElementaryFactor;
using tpb::FactorSide;
using tpb::RatMatrix;
using tpb::Rational;
using tpb::rat;

namespace {

// cofactor expansion along the first row, independent of the Bareiss code
Rational laplace_det(const RatMatrix& a) {
  std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a(0, j)) == 0) continue;
    RatMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = a(r, c);
      }
    }
    Rational term = a(0, j) * laplace_det(sub);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

// every square submatrix, all orders, via subset enumeration
bool all_minors_nonnegative(const RatMatrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    auto collect = [](std::size_t total, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        out.push_back(idx);
        std::size_t p = k;
        while (p > 0 && idx[p - 1] == total - k + (p - 1)) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
      }
    };
    collect(m, k, rsets);
    collect(n, k, csets);
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
        if (sgn(laplace_det(sub)) < 0) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("elementary factors are stochastic one-parameter perturbations of I") {
  ElementaryFactor up(FactorSide::Upper, 2, rat(1, 2));
  RatMatrix u = tpb::elementary_matrix(up, 2);
  CHECK(u(0, 0) == rat(1, 2));
  CHECK(u(0, 1) == rat(1, 2));
  CHECK(u(1, 0) == 0);
  CHECK(u(1, 1) == 1);
  ElementaryFactor low(FactorSide::Lower, 3, rat(1, 4));
  RatMatrix l = tpb::elementary_matrix(low, 3);
  CHECK(l(2, 1) == rat(1, 4));
  CHECK(l(2, 2) == rat(3, 4));
  CHECK(l(0, 0) == 1);
  CHECK(l(1, 1) == 1);
  for (const auto& s : l.row_sums()) CHECK(s == 1);
}

TEST_CASE("elementary inverse under checkerboard conjugation, desk check") {
  // For U_2(1/2) = [[1/2,1/2],[0,1]]: U^{-1} = [[2,-1],[0,1]], and J U^{-1} J
  // flips the off-diagonal sign back to give [[2,1],[0,1]].
  ElementaryFactor f(FactorSide::Upper, 2, rat(1, 2));
  RatMatrix expect(2, 2);
  expect(0, 0) = rat(2); expect(0, 1) = rat(1);
  expect(1, 0) = rat(0); expect(1, 1) = rat(1);
  CHECK(tpb::elementary_inverse_checkerboard(f, 2) == expect);
  // and it really is J E^{-1} J
  RatMatrix e = tpb::elementary_matrix(f, 2);
  RatMatrix ji = tpb::checkerboard(tpb::inverse(e));
  CHECK(ji == expect);
  // same identity for a lower factor embedded in a bigger identity
  ElementaryFactor g(FactorSide::Lower, 3, rat(2, 7));
  CHECK(tpb::elementary_inverse_checkerboard(g, 4) ==
        tpb::checkerboard(tpb::inverse(tpb::elementary_matrix(g, 4))));
}

TEST_CASE("factor list follows the canonical slot order") {
  BidiagonalFactorization f(4);
  const auto& fs = f.factors();
  REQUIRE(fs.size() == 12);
  // lower factors grouped by subdiagonal, outermost first: slots (4,1) then
  // (3,1) (4,2) then (2,1) (3,2) (4,3)
  int lower_i[6] = {4, 3, 4, 2, 3, 4};
  // upper factors grouped by superdiagonal, nearest first, bottom-up within
  // each group: slots (3,4) (2,3) (1,2) then (2,4) (1,3) then (1,4)
  int upper_i[6] = {4, 3, 2, 4, 3, 4};
  for (int k = 0; k < 6; ++k) {
    CHECK(fs[k].side == FactorSide::Lower);
    CHECK(fs[k].i == lower_i[k]);
    CHECK(fs[k + 6].side == FactorSide::Upper);
    CHECK(fs[k + 6].i == upper_i[k]);
  }
}

TEST_CASE("compose and factorize invert each other") {
  BidiagonalFactorization f(3);
  f.alpha(2, 1) = rat(1, 3);
  f.alpha(3, 1) = rat(1, 5);
  f.alpha(3, 2) = rat(2, 7);
  f.alpha(1, 2) = rat(3, 8);
  f.alpha(2, 3) = rat(1, 9);
  f.alpha(1, 3) = rat(4, 11);
  f.rebuild();
  RatMatrix m = tpb::compose(f);
  CHECK(tpb::is_stochastic(m));
  CHECK(tpb::is_tp(m));
  BidiagonalFactorization back = tpb::factorize(m);
  CHECK(back == f);
  CHECK(tpb::compose(back) == m);
}

TEST_CASE("random round trips over several sizes") {
  tpb::SeededRng rng(11);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      RatMatrix m = tpb::random_stochastic_tp(n, rng, rat(9, 10));
      BidiagonalFactorization f = tpb::factorize(m);
      CHECK(tpb::compose(f) == m);
      // and the factor parameters all lie in [0, 1)
      for (const auto& fac : f.factors()) {
        CHECK(sgn(fac.lambda) >= 0);
        CHECK(fac.lambda < 1);
      }
    }
  }
}

TEST_CASE("factorization JSON round trip") {
  tpb::SeededRng rng(5);
  RatMatrix m = tpb::random_stochastic_tp(4, rng, rat(4, 5));
  BidiagonalFactorization f = tpb::factorize(m);
  tpb::Json j = f.to_json();
  BidiagonalFactorization g = BidiagonalFactorization::from_json(j);
  CHECK(g == f);
  CHECK(tpb::compose(g) == m);
}

TEST_CASE("factorize rejects bad input") {
  // shape problems are usage errors, not math failures
  RatMatrix notsq(2, 3, rat(1, 3));
  CHECK_THROWS_AS(tpb::factorize(notsq), std::invalid_argument);
  RatMatrix notstoch(2, 2, rat(1));
  CHECK_THROWS_AS(tpb::factorize(notstoch), tpb::not_stochastic_tp_error);
  // stochastic but not TP: negative 2x2 minor
  RatMatrix nottp(2, 2);
  nottp(0, 0) = rat(1, 4); nottp(0, 1) = rat(3, 4);
  nottp(1, 0) = rat(3, 4); nottp(1, 1) = rat(1, 4);
  CHECK_FALSE(tpb::is_tp(nottp));
  CHECK_THROWS_AS(tpb::factorize(nottp), tpb::not_stochastic_tp_error);
  // stochastic TP but singular
  RatMatrix sing(2, 2, rat(1, 2));
  CHECK(tpb::is_tp(sing));
  CHECK_THROWS_AS(tpb::factorize(sing), tpb::not_stochastic_tp_error);
}

TEST_CASE("is_tp agrees with the exhaustive minor oracle") {
  tpb::SeededRng rng(7);
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      RatMatrix m = tpb::random_stochastic_tp(n, rng, rat(9, 10));
      CHECK(all_minors_nonnegative(m));
      CHECK(tpb::is_tp(m));
      ++checked;
      // perturb one entry downward; recheck both verdicts stay equal
      int i = static_cast<int>(rng.uniform_long(0, n - 1));
      int j = static_cast<int>(rng.uniform_long(0, n - 1));
      RatMatrix p = m;
      p(i, j) -= rat(1, 2);
      CHECK(tpb::is_tp(p) == all_minors_nonnegative(p));
      ++checked;
    }
  }
  CHECK(checked == 48);
  // hand-built borderline cases
  RatMatrix z(3, 3);  // zero matrix is TP
  CHECK(tpb::is_tp(z) == all_minors_nonnegative(z));
  RatMatrix ones(3, 3, rat(1));  // rank one, TP
  CHECK(tpb::is_tp(ones));
  CHECK(all_minors_nonnegative(ones));
  RatMatrix neg(2, 2);
  neg(0, 0) = rat(1); neg(0, 1) = rat(2);
  neg(1, 0) = rat(3); neg(1, 1) = rat(4);  // det -2
  CHECK(tpb::is_tp(neg) == all_minors_nonnegative(neg));
  CHECK_FALSE(tpb::is_tp(neg));
  // rectangular input
  RatMatrix rect(2, 3);
  rect(0, 0) = rat(1); rect(0, 1) = rat(1); rect(0, 2) = rat(1);
  rect(1, 0) = rat(1); rect(1, 1) = rat(2); rect(1, 2) = rat(4);
  CHECK(tpb::is_tp(rect) == all_minors_nonnegative(rect));
}

TEST_CASE("bernstein collocation matrices pass the minor oracle") {
  // classic TP family, checked exhaustively at small sizes
  tpb::BasisSystem bern = tpb::BasisSystem::bernstein(3);
  RatMatrix c = tpb::collocation_matrix(bern, tpb::uniform_interior_nodes(2));
  CHECK(all_minors_nonnegative(c));
  CHECK(tpb::is_tp(c));
}

TEST_CASE("determinant against the cofactor oracle") {
  tpb::SeededRng rng(13);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      RatMatrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a(i, j) = rat(rng.uniform_long(-20, 20), rng.uniform_long(1, 9));
      CHECK(tpb::determinant(a) == laplace_det(a));
    }
  }
  CHECK(tpb::determinant(RatMatrix::identity(4)) == 1);
}

TEST_CASE("exact inverse multiplies back to the identity") {
  tpb::SeededRng rng(17);
  for (int n = 2; n <= 5; ++n) {
    RatMatrix a = tpb::random_stochastic_tp(n, rng, rat(9, 10));
    RatMatrix inv = tpb::inverse(a);
    CHECK(a * inv == RatMatrix::identity(n));
    CHECK(inv * a == RatMatrix::identity(n));
  }
  RatMatrix sing(2, 2, rat(1, 2));
  CHECK_THROWS_AS(tpb::inverse(sing), tpb::singular_matrix_error);
}

TEST_CASE("checkerboard conjugation is an involution") {
  RatMatrix a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rat(i + 2 * j + 1, j + 1);
  CHECK(tpb::checkerboard(tpb::checkerboard(a)) == a);
  CHECK(tpb::checkerboard(a)(0, 1) == -a(0, 1));
  CHECK(tpb::checkerboard(a)(1, 1) == a(1, 1));
}

TEST_CASE("inverse of a TP stochastic matrix has checkerboard signs") {
  tpb::SeededRng rng(19);
  RatMatrix m = tpb::random_stochastic_tp(4, rng, rat(9, 10));
  RatMatrix ji = tpb::checkerboard(tpb::inverse(m));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(sgn(ji(i, j)) >= 0);
}
