#pragma once

// Eigenvalues, singular values, spectral radius and condition numbers for
// small dense matrices at configurable precision. Eigenvalues go through the
// exact characteristic polynomial with real-root isolation; singular values
// through cyclic Jacobi on the symmetric product.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpbasis/matrix.hpp"
#include "tpbasis/poly.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

struct non_real_spectrum_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact char poly det(xI - A) by the Faddeev-LeVerrier recurrence
Poly characteristic_polynomial(const RatMatrix& a);

// All eigenvalues, ascending, with multiplicity. Throws non_real_spectrum_error
// when fewer than n real roots exist. The decimal overload rationalizes the
// (dyadic, hence exact) entries and runs the same path.
std::vector<Decimal> eigenvalues(const RatMatrix& a, const PrecisionConfig& cfg);
std::vector<Decimal> eigenvalues(const DecMatrix& a, const PrecisionConfig& cfg);

// Singular values ascending: cyclic Jacobi on A^T A, square roots of its
// eigenvalues. Sweeps stop when every off-diagonal entry is below
// 10^(-digits+5) times the Frobenius norm.
std::vector<Decimal> singular_values(const DecMatrix& a, const PrecisionConfig& cfg);
std::vector<Decimal> singular_values(const RatMatrix& a, const PrecisionConfig& cfg);

// Exact rational infinity-norm condition number; nullopt when singular.
// kappa_1(A) = kappa_inf(A^T).
std::optional<Rational> cond_inf(const RatMatrix& a);
std::optional<Rational> cond_1(const RatMatrix& a);

// Largest eigenvalue modulus. Real-spectrum path when the characteristic
// polynomial has n real roots; otherwise a norm-based limit estimate
// (repeated squaring of a normalized power), an upper bound within 10^(-21)
// relatively, adequate for inequality checks at 10^(-20).
Decimal spectral_radius(const RatMatrix& a, const PrecisionConfig& cfg);

struct SpectralSummary {
  int n = 0;
  int digits = 0;
  bool singular = false;
  Decimal lambda_min, lambda_max;
  Decimal sigma_min, sigma_max;
  Decimal rho;
  std::optional<Rational> kappa_1, kappa_inf;  // exact; nullopt when singular
  Decimal kappa_2;                             // infinity when singular

  Json to_json() const;
};

SpectralSummary spectral_summary(const RatMatrix& a, const PrecisionConfig& cfg);

}  // namespace tpb
