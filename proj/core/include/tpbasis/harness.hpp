#pragma once

// Randomized property suites for the extremal inequalities: elementary-factor
// and stochastic-TP-multiplier comparisons, the normalized-B-basis collocation
// comparisons, and the nonnegative-domination spectral radius bound. Exact
// claims are checked exactly; decimal claims carry an explicit tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpbasis/bases.hpp"
#include "tpbasis/matrix.hpp"
#include "tpbasis/random.hpp"
#include "tpbasis/tpcore.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

struct RandomModelConfig {
  std::uint64_t seed = 1;
  int n_min = 2;
  int n_max = 8;
  Rational alpha_max = rat(19, 20);
  long weight_min = 1;
  long weight_max = 1000;
  int trials = 100;
};

struct PropertyReport {
  std::string property;
  int attempted = 0;
  int passed = 0;
  std::uint64_t seed = 0;
  int digits = 0;
  std::optional<Decimal> worst_margin;  // smallest slack seen across all inequalities
  std::vector<Json> failures;           // full inputs, replayable

  bool all_passed() const { return passed == attempted; }
  void note_margin(const Decimal& m);
  void merge(const PropertyReport& other);
  Json to_json() const;
};

// nonsingular stochastic TP matrix composed from uniform multiplier draws
RatMatrix random_stochastic_tp(int n, SeededRng& rng, const Rational& alpha_max);

ElementaryFactor random_factor(int n, SeededRng& rng, const Rational& alpha_max);

// integer weights, uniform in [weight_min, weight_max]
std::vector<Rational> random_weights(int n, SeededRng& rng, long lo, long hi);

// Single-instance checks. Preconditions throw; inequality violations are
// recorded in the report. Decimal tolerance: 10^(-digits+15).
//
// For A = M E (E an elementary stochastic factor) and C = E^T M:
//   (i) |A^-1| >= |M^-1| and |C^-1| >= |M^-1| entrywise, exact
//   (ii) lambda_min(A) <= lambda_min(M), same for C
//   (iii) sigma_min(A) <= sigma_min(M), same for C
//   (iv) kappa_inf(M) <= kappa_inf(A), kappa_1(M) <= kappa_1(C), exact
PropertyReport check_theorem_3_1(const RatMatrix& m, const ElementaryFactor& f,
                                 const PrecisionConfig& cfg);

// same four claims for A = M K and C = K^T M, K nonsingular stochastic TP
PropertyReport check_corollary_3_2(const RatMatrix& m, const RatMatrix& k,
                                   const PrecisionConfig& cfg);

// Collocation comparison: M from the normalized B-basis, A from another NTP
// basis of the same space at the same nodes. Asserts lambda_min(M) >=
// lambda_min(A), sigma_min(M) >= sigma_min(A), and kappa_inf(M) <=
// kappa_inf(A) exactly when both are nonsingular; a singular pair short-
// circuits to the both-zero branch.
PropertyReport check_corollary_3_3(const BasisSystem& normalized, const BasisSystem& other,
                                   const std::vector<Rational>& nodes,
                                   const PrecisionConfig& cfg);

// rho(M) >= rho(C) - 10^(-20) for M nonnegative and |C| <= M entrywise
PropertyReport check_wielandt(const RatMatrix& m, const RatMatrix& c,
                              const PrecisionConfig& cfg);

// Seeded suites over the random model; names: thm3.1, cor3.2, cor3.3, wielandt.
PropertyReport run_thm_3_1_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg);
PropertyReport run_cor_3_2_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg);
PropertyReport run_cor_3_3_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg);
PropertyReport run_wielandt_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg);
PropertyReport run_suite(const std::string& name, const RandomModelConfig& rc,
                         const PrecisionConfig& cfg);

}  // namespace tpb
