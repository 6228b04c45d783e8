#pragma once

// Rewrites a Bernstein weight vector in the Said-Ball or DP basis: the output
// v satisfies sum_j w_j b_j = sum_j v_j u_j identically, computed by exact
// collocation solves.

#include <stdexcept>
#include <string>
#include <vector>

#include "tpbasis/bases.hpp"
#include "tpbasis/matrix.hpp"

namespace tpb {

enum class ConversionTarget { SaidBall, DP };

// raised when positivity rejection sampling hits its draw cap
struct rejection_cap_error : std::runtime_error {
  rejection_cap_error() : std::runtime_error("weight rejection cap exhausted") {}
};

ConversionTarget target_from_name(const std::string& s);  // "said-ball" | "dp"
std::string target_name(ConversionTarget t);

// Holds the exact Bernstein-to-target transfer matrix for one degree, so a
// rejection-sampling loop pays for the collocation solve only once.
class WeightConverter {
 public:
  WeightConverter(ConversionTarget target, int n);
  std::vector<Rational> operator()(const std::vector<Rational>& w) const;
  int n() const { return n_; }

 private:
  int n_;
  RatMatrix transfer_;
};

// coefficient vector of sum w_j b_j^n in the target degree-n basis, exact
std::vector<Rational> convert_weights(ConversionTarget target, const std::vector<Rational>& w);

// the inverse direction, used by round-trip checks
std::vector<Rational> convert_to_bernstein(ConversionTarget source, const std::vector<Rational>& w);

bool all_positive(const std::vector<Rational>& w);

// sum_j w_j u_j(t)
Rational weighted_value(const BasisSystem& basis, const std::vector<Rational>& w, const Rational& t);

}  // namespace tpb
