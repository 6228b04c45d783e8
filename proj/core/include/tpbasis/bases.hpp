#pragma once

// The function families: Bernstein on [a,b], Said-Ball, DP, their rational
// (weighted) variants, B-splines and NURBS, the even-cosine basis on [0,pi],
// and the trigonometric-polynomial basis on [-A,A]. Polynomial-type variants
// evaluate exactly at rational points; trigonometric ones need decimal points.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tpbasis/decimal.hpp"
#include "tpbasis/matrix.hpp"
#include "tpbasis/rational.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

enum class BasisKind {
  Bernstein,
  RationalBernstein,
  SaidBall,
  RationalSaidBall,
  DP,
  RationalDP,
  BSpline,
  NURBS,
  CosineEven,
  TrigPoly,
};

std::string kind_name(BasisKind k);
BasisKind kind_from_name(const std::string& s);

struct BasisSystem {
  BasisKind kind = BasisKind::Bernstein;
  int n = 1;                      // degree parameter; dimension is n+1 (2n+1 for TrigPoly)
  Rational a = Rational(0);       // Bernstein interval
  Rational b = Rational(1);
  std::vector<Rational> weights;  // rational variants, NURBS
  std::vector<Rational> knots;    // BSpline, NURBS
  int degree = 0;                 // BSpline, NURBS
  Rational half_width;            // TrigPoly A, 0 < A < pi/2

  static BasisSystem bernstein(int n, Rational a = Rational(0), Rational b = Rational(1));
  static BasisSystem rational_bernstein(int n, Rational a, Rational b, std::vector<Rational> w);
  static BasisSystem said_ball(int n);
  static BasisSystem rational_said_ball(int n, std::vector<Rational> w);
  static BasisSystem dp(int n);
  static BasisSystem rational_dp(int n, std::vector<Rational> w);
  static BasisSystem bspline(int degree, std::vector<Rational> knots);
  static BasisSystem nurbs(int degree, std::vector<Rational> knots, std::vector<Rational> w);
  static BasisSystem cosine_even(int n);
  static BasisSystem trig_poly(int n, Rational half_width);

  int dimension() const;
  // false for the trigonometric variants, which only evaluate on decimals
  bool polynomial_backend() const;
  // exact domain endpoints; throws for the trigonometric variants (their
  // domains involve pi, see decimal_domain)
  Rational domain_lo() const;
  Rational domain_hi() const;

  Json to_json() const;
  static BasisSystem from_json(const Json& j);
};

// domain endpoints for any variant at working precision
std::pair<Decimal, Decimal> decimal_domain(const BasisSystem& basis, const PrecisionConfig& cfg);

// basis values (u_0(t), ..., u_dim-1(t))
std::vector<Rational> evaluate(const BasisSystem& basis, const Rational& t);
std::vector<Decimal> evaluate(const BasisSystem& basis, const Decimal& t, const PrecisionConfig& cfg);

// attach positive weights: Bernstein -> rational Bernstein, Said-Ball ->
// rational Said-Ball, DP -> rational DP, BSpline -> NURBS
BasisSystem rationalize(const BasisSystem& base, std::vector<Rational> weights);

// Cox-de Boor with 0/0 := 0; knots nondecreasing, t in [knots[d], knots[K-d-1]]
// closed at the right end by taking the left limit there
std::vector<Rational> bspline_basis(int degree, const std::vector<Rational>& knots, const Rational& t);

}  // namespace tpb
