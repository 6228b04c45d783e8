#pragma once

// Dense univariate polynomials with exact rational coefficients, plus the
// real-root machinery used by the spectral module: Yun square-free
// decomposition, Sturm isolation, and exact bisection refinement.

#include <utility>
#include <vector>

#include "tpbasis/decimal.hpp"
#include "tpbasis/rational.hpp"

namespace tpb {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;
  Poly operator-() const { return *this * Rational(-1); }

  // trim() keeps coefficients canonical, so this is plain equality
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // exact division; throws if the remainder is nonzero
  Poly divide_exact(const Poly& d) const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  // scaled to integer coefficients with content 1 and positive leading
  // coefficient (same roots)
  Poly primitive() const;

  // scaled by a positive rational to integer coefficients with content 1;
  // every sign survives, which Sturm chains depend on
  Poly integer_scaled() const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // ascending
};

Poly poly_gcd(Poly a, Poly b);

// Yun's algorithm: p ~ prod f_k^{m_k} with the f_k square-free and pairwise
// coprime; returned as (f_k, m_k) pairs, ascending multiplicity.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

struct RootLocation {
  bool exact = false;
  Rational root;          // set when exact
  Rational lo, hi;        // open isolating interval otherwise, sign change across it
  int multiplicity = 1;
  Poly factor;            // square-free factor vanishing at the root
};

// |root| <= bound for every root
Rational root_bound(const Poly& p);

// Disjoint locations of all real roots, with multiplicities.
std::vector<RootLocation> isolate_real_roots(const Poly& p);

// total number of real roots counted with multiplicity
int count_real_roots(const Poly& p);

// Bisect the location's interval until narrower than `width`. Rational roots
// caught by a final simplest-rational probe of the bracket come back exact.
Rational refine_root(const RootLocation& loc, const Rational& width);

// All real roots, ascending, repeated per multiplicity, refined so the
// decimal conversion is correct to cfg.digits.
std::vector<Decimal> real_roots(const Poly& p, const PrecisionConfig& cfg);

}  // namespace tpb
