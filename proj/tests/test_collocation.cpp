// Collocation matrices and node generators. The Bernstein entries double as
// an oracle through the explicit binomial formula; stochasticity and total
// positivity come from the normalized-basis structure.

#include <vector>

#include "doctest.h"
#include "tpbasis/bases.hpp"
#include "tpbasis/collocation.hpp"
#include "tpbasis/matrix.hpp"
#include "tpbasis/tpcore.hpp"

using tpb::BasisSystem;
using tpb::DecMatrix;
using tpb::Decimal;
using tpb::PrecisionConfig;
using tpb::RatMatrix;
using tpb::Rational;
using tpb::rat;

namespace {

Rational pow10_rat(int e) {
  tpb::Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : rat(tpb::Integer(1), p);
}

Rational abs_rat(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational pow_rat(const Rational& x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("uniform interior nodes") {
  auto nodes = tpb::uniform_interior_nodes(2);
  REQUIRE(nodes.size() == 3);
  CHECK(nodes[0] == rat(1, 4));
  CHECK(nodes[1] == rat(2, 4));
  CHECK(nodes[2] == rat(3, 4));
  auto two = tpb::uniform_interior_nodes(1);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == rat(1, 3));
  CHECK(two[1] == rat(2, 3));
  CHECK_THROWS(tpb::uniform_interior_nodes(0));
}

TEST_CASE("bernstein collocation entries match the binomial formula") {
  BasisSystem basis = BasisSystem::bernstein(3);
  auto nodes = tpb::uniform_interior_nodes(2);
  RatMatrix c = tpb::collocation_matrix(basis, nodes);
  REQUIRE(c.rows() == 3);
  REQUIRE(c.cols() == 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      Rational t = nodes[i];
      Rational expect = Rational(tpb::binomial(3, static_cast<unsigned long>(j))) *
                        pow_rat(t, j) * pow_rat(1 - t, 3 - j);
      CHECK(c(i, static_cast<std::size_t>(j)) == expect);
    }
  CHECK(tpb::is_stochastic(c));
  CHECK(tpb::is_tp(c));
}

TEST_CASE("collocation demands increasing interior nodes") {
  BasisSystem basis = BasisSystem::bernstein(2);
  CHECK_THROWS(tpb::collocation_matrix(basis, {rat(1, 2), rat(1, 2)}));
  CHECK_THROWS(tpb::collocation_matrix(basis, {rat(3, 4), rat(1, 4)}));
  CHECK_THROWS(tpb::collocation_matrix(basis, {rat(-1, 4)}));
  CHECK_THROWS(tpb::collocation_matrix(basis, {rat(5, 4)}));
  // endpoints themselves are valid nodes
  RatMatrix c = tpb::collocation_matrix(basis, {rat(0), rat(1, 2), rat(1)});
  CHECK(c(0, 0) == 1);
  CHECK(c(2, 2) == 1);
}

TEST_CASE("square collocation matrices of normalized bases are stochastic TP") {
  std::vector<BasisSystem> systems;
  systems.push_back(BasisSystem::bernstein(4));
  systems.push_back(BasisSystem::said_ball(4));
  systems.push_back(BasisSystem::dp(4));
  systems.push_back(BasisSystem::rational_bernstein(
      3, rat(0), rat(1), {rat(1), rat(2), rat(1, 2), rat(3)}));
  for (const auto& basis : systems) {
    auto nodes = tpb::uniform_interior_nodes(basis.dimension() - 1);
    REQUIRE(static_cast<int>(nodes.size()) == basis.dimension());
    RatMatrix c = tpb::collocation_matrix(basis, nodes);
    CHECK(c.rows() == c.cols());
    CHECK(tpb::is_stochastic(c));
    CHECK(tpb::is_tp(c));
    CHECK(sgn(tpb::determinant(c)) > 0);
  }
  // bspline on its own domain
  BasisSystem bs = BasisSystem::bspline(2, {rat(0), rat(0), rat(0), rat(1), rat(2), rat(2), rat(2)});
  std::vector<Rational> nodes = {rat(1, 4), rat(3, 4), rat(5, 4), rat(7, 4)};
  RatMatrix c = tpb::collocation_matrix(bs, nodes);
  CHECK(tpb::is_stochastic(c));
  CHECK(tpb::is_tp(c));
}

TEST_CASE("decimal collocation approaches the exact one") {
  PrecisionConfig cfg{60};
  BasisSystem basis = BasisSystem::bernstein(3);
  std::vector<Rational> fr = {rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)};
  auto dnodes = tpb::decimal_nodes(basis, fr, cfg);
  REQUIRE(dnodes.size() == 4);
  DecMatrix dc = tpb::collocation_matrix(basis, dnodes, cfg);
  RatMatrix exact = tpb::collocation_matrix(basis, fr);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(abs_rat(dc(i, j).to_exact_rational() - exact(i, j)) <= pow10_rat(-55));
  CHECK(tpb::is_stochastic(dc, cfg));
  CHECK(tpb::is_tp(dc, cfg));
}

TEST_CASE("trigonometric collocation is stochastic at working precision") {
  PrecisionConfig cfg{60};
  BasisSystem ce = BasisSystem::cosine_even(2);
  std::vector<Rational> fr = {rat(1, 6), rat(1, 2), rat(5, 6)};
  auto nodes = tpb::decimal_nodes(ce, fr, cfg);
  DecMatrix c = tpb::collocation_matrix(ce, nodes, cfg);
  CHECK(c.rows() == 3);
  CHECK(c.cols() == 3);
  CHECK(tpb::is_stochastic(c, cfg));
  CHECK(tpb::is_tp(c, cfg));
  BasisSystem tp = BasisSystem::trig_poly(1, rat(2, 5));
  auto tnodes = tpb::decimal_nodes(tp, fr, cfg);
  DecMatrix tc = tpb::collocation_matrix(tp, tnodes, cfg);
  CHECK(tpb::is_stochastic(tc, cfg));
  CHECK(tpb::is_tp(tc, cfg));
}

TEST_CASE("is_stochastic rejects what it should") {
  RatMatrix bad(2, 2, rat(1, 2));
  bad(0, 0) = rat(-1, 2);
  bad(0, 1) = rat(3, 2);
  CHECK_FALSE(tpb::is_stochastic(bad));  // negative entry
  RatMatrix short_rows(2, 2, rat(1, 3));
  CHECK_FALSE(tpb::is_stochastic(short_rows));  // rows sum to 2/3
  CHECK(tpb::is_stochastic(RatMatrix::identity(3)));
}
