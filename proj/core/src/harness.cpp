#include "tpbasis/harness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tpbasis/collocation.hpp"
#include "tpbasis/conversion.hpp"
#include "tpbasis/matrix_io.hpp"
#include "tpbasis/spectral.hpp"

namespace tpb {

void PropertyReport::note_margin(const Decimal& m) {
  if (!worst_margin || m < *worst_margin) worst_margin = m;
}

void PropertyReport::merge(const PropertyReport& other) {
  attempted += other.attempted;
  passed += other.passed;
  if (other.worst_margin) note_margin(*other.worst_margin);
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Json PropertyReport::to_json() const {
  Json j;
  j["property"] = property;
  j["attempted"] = attempted;
  j["passed"] = passed;
  j["seed"] = seed;
  j["digits"] = digits;
  j["worst_margin"] = worst_margin ? Json(worst_margin->to_string(30)) : Json(nullptr);
  j["failures"] = failures;
  return j;
}

RatMatrix random_stochastic_tp(int n, SeededRng& rng, const Rational& alpha_max) {
  if (n < 2) throw std::invalid_argument("size below 2");
  BidiagonalFactorization f(n);
  for (int d = n - 1; d >= 1; --d)
    for (int k = d + 1; k <= n; ++k) f.alpha(k, k - d) = rng.alpha(alpha_max);
  for (int d = 1; d <= n - 1; ++d)
    for (int k = n; k >= d + 1; --k) f.alpha(k - d, k) = rng.alpha(alpha_max);
  f.rebuild();
  return compose(f);
}

ElementaryFactor random_factor(int n, SeededRng& rng, const Rational& alpha_max) {
  if (n < 2) throw std::invalid_argument("size below 2");
  FactorSide side = rng.coin() ? FactorSide::Lower : FactorSide::Upper;
  int i = static_cast<int>(rng.uniform_long(2, n));
  return ElementaryFactor(side, i, rng.alpha(alpha_max));
}

std::vector<Rational> random_weights(int n, SeededRng& rng, long lo, long hi) {
  if (n < 0 || lo < 1 || hi < lo) throw std::invalid_argument("bad weight range");
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) w.emplace_back(rng.uniform_long(lo, hi));
  return w;
}

namespace {

Json factor_json(const ElementaryFactor& f) {
  return Json{{"side", f.side == FactorSide::Lower ? "L" : "U"},
              {"i", f.i},
              {"lambda", to_string(f.lambda)}};
}

// minimum of |y| - |x| entrywise; >= 0 certifies domination of x by |y|
Rational domination_margin(const RatMatrix& dominating, const RatMatrix& dominated) {
  Rational best;
  bool first = true;
  for (std::size_t i = 0; i < dominating.rows(); ++i)
    for (std::size_t j = 0; j < dominating.cols(); ++j) {
      Rational d = abs(dominating(i, j)) - abs(dominated(i, j));
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  return best;
}

struct ClaimTracker {
  PropertyReport& report;
  const PrecisionConfig& cfg;
  std::vector<std::string> violated;

  // exact claim: pass iff margin >= 0
  void exact(const Rational& margin, const std::string& label) {
    report.note_margin(rational_to_decimal(margin, cfg));
    if (sgn(margin) < 0) violated.push_back(label);
  }
  // decimal claim at the harness tolerance 10^(-digits+15)
  void approx(const Decimal& margin, const std::string& label) {
    report.note_margin(margin);
    if (margin < -Decimal::pow10(-cfg.digits + 15, cfg)) violated.push_back(label);
  }
};

void finish_trial(PropertyReport& report, ClaimTracker& t, Json inputs) {
  report.attempted += 1;
  if (t.violated.empty()) {
    report.passed += 1;
  } else {
    inputs["violated"] = t.violated;
    report.failures.push_back(std::move(inputs));
  }
}

// shared body: the four claims for A = M R and C = R^T M
void extremal_claims(const RatMatrix& m, const RatMatrix& r, ClaimTracker& t,
                     const PrecisionConfig& cfg) {
  RatMatrix a = m * r;
  RatMatrix c = r.transpose() * m;

  RatMatrix minv = inverse(m), ainv = inverse(a), cinv = inverse(c);
  t.exact(domination_margin(ainv, minv), "entrywise |A^-1| >= |M^-1|");
  t.exact(domination_margin(cinv, minv), "entrywise |C^-1| >= |M^-1|");

  Decimal lm = eigenvalues(m, cfg).front();
  t.approx(lm - eigenvalues(a, cfg).front(), "lambda_min(A) <= lambda_min(M)");
  t.approx(lm - eigenvalues(c, cfg).front(), "lambda_min(C) <= lambda_min(M)");

  Decimal sm = singular_values(m, cfg).front();
  t.approx(sm - singular_values(a, cfg).front(), "sigma_min(A) <= sigma_min(M)");
  t.approx(sm - singular_values(c, cfg).front(), "sigma_min(C) <= sigma_min(M)");

  t.exact(*cond_inf(a) - *cond_inf(m), "kappa_inf(M) <= kappa_inf(A)");
  t.exact(*cond_1(c) - *cond_1(m), "kappa_1(M) <= kappa_1(C)");
}

void require_nonsingular_tp(const RatMatrix& m, const char* what) {
  if (!m.square()) throw std::invalid_argument(std::string(what) + " must be square");
  if (!is_tp(m)) throw std::invalid_argument(std::string(what) + " must be TP");
  if (sgn(determinant(m)) == 0)
    throw std::invalid_argument(std::string(what) + " must be nonsingular");
}

}  // namespace

PropertyReport check_theorem_3_1(const RatMatrix& m, const ElementaryFactor& f,
                                 const PrecisionConfig& cfg) {
  require_nonsingular_tp(m, "M");
  if (f.i > static_cast<int>(m.rows())) throw std::invalid_argument("factor index exceeds size");

  PropertyReport report;
  report.property = "thm3.1";
  report.digits = cfg.digits;
  ClaimTracker t{report, cfg, {}};
  extremal_claims(m, elementary_matrix(f, static_cast<int>(m.rows())), t, cfg);
  finish_trial(report, t, Json{{"m", matrix_to_json(m)}, {"factor", factor_json(f)}});
  return report;
}

PropertyReport check_corollary_3_2(const RatMatrix& m, const RatMatrix& k,
                                   const PrecisionConfig& cfg) {
  require_nonsingular_tp(m, "M");
  require_nonsingular_tp(k, "K");
  if (!is_stochastic(k)) throw std::invalid_argument("K must be stochastic");
  if (m.rows() != k.rows()) throw std::invalid_argument("size mismatch");

  PropertyReport report;
  report.property = "cor3.2";
  report.digits = cfg.digits;
  ClaimTracker t{report, cfg, {}};
  extremal_claims(m, k, t, cfg);
  finish_trial(report, t, Json{{"m", matrix_to_json(m)}, {"k", matrix_to_json(k)}});
  return report;
}

PropertyReport check_corollary_3_3(const BasisSystem& normalized, const BasisSystem& other,
                                   const std::vector<Rational>& nodes,
                                   const PrecisionConfig& cfg) {
  if (normalized.dimension() != other.dimension())
    throw std::invalid_argument("bases must share a dimension");
  if (nodes.size() != static_cast<std::size_t>(normalized.dimension()))
    throw std::invalid_argument("node count must match the dimension");

  PropertyReport report;
  report.property = "cor3.3";
  report.digits = cfg.digits;
  ClaimTracker t{report, cfg, {}};

  RatMatrix m = collocation_matrix(normalized, nodes);
  RatMatrix a = collocation_matrix(other, nodes);
  bool m_singular = sgn(determinant(m)) == 0;
  bool a_singular = sgn(determinant(a)) == 0;

  Json inputs{{"normalized", normalized.to_json()},
              {"other", other.to_json()},
              {"nodes", Json::array()}};
  for (const auto& nd : nodes) inputs["nodes"].push_back(to_string(nd));

  if (m_singular || a_singular) {
    // the bases span the same space, so singularity must strike both; the
    // minimal eigenvalue and singular value of each are then exactly 0
    if (m_singular != a_singular) t.violated.push_back("singularity mismatch");
    finish_trial(report, t, std::move(inputs));
    return report;
  }

  t.approx(eigenvalues(m, cfg).front() - eigenvalues(a, cfg).front(),
           "lambda_min(M) >= lambda_min(A)");
  t.approx(singular_values(m, cfg).front() - singular_values(a, cfg).front(),
           "sigma_min(M) >= sigma_min(A)");
  t.exact(*cond_inf(a) - *cond_inf(m), "kappa_inf(M) <= kappa_inf(A)");
  finish_trial(report, t, std::move(inputs));
  return report;
}

PropertyReport check_wielandt(const RatMatrix& m, const RatMatrix& c,
                              const PrecisionConfig& cfg) {
  if (!m.square() || m.rows() != c.rows() || m.cols() != c.cols())
    throw std::invalid_argument("M and C must be square of equal size");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) < 0) throw std::invalid_argument("M must be nonnegative");
      if (abs(c(i, j)) > m(i, j)) throw std::invalid_argument("M must dominate |C|");
    }

  PropertyReport report;
  report.property = "wielandt";
  report.digits = cfg.digits;
  report.attempted = 1;

  Decimal margin = spectral_radius(m, cfg) - spectral_radius(c, cfg);
  report.note_margin(margin);
  // rho(C) comes from a norm-limit upper estimate, so the comparison carries
  // a fixed 10^(-20) allowance
  if (margin >= -Decimal::pow10(-20, cfg)) {
    report.passed = 1;
  } else {
    report.failures.push_back(Json{{"m", matrix_to_json(m)},
                                   {"c", matrix_to_json(c)},
                                   {"violated", Json::array({"rho(M) >= rho(C)"})}});
  }
  return report;
}

namespace {

RatMatrix random_m_for_extremal(int n, SeededRng& rng, const RandomModelConfig& rc) {
  RatMatrix m = random_stochastic_tp(n, rng, rc.alpha_max);
  if (rng.coin()) {
    // positive row scaling leaves TP and nonsingularity intact but breaks
    // stochasticity, exercising the general-M side of the claims
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational d(rng.uniform_long(1, 10));
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= d;
    }
  }
  return m;
}

}  // namespace

PropertyReport run_thm_3_1_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg) {
  SeededRng rng(rc.seed);
  PropertyReport report;
  report.property = "thm3.1";
  report.seed = rc.seed;
  report.digits = cfg.digits;
  for (int t = 0; t < rc.trials; ++t) {
    int n = static_cast<int>(rng.uniform_long(std::max(2, rc.n_min), std::max(2, rc.n_max)));
    RatMatrix m = random_m_for_extremal(n, rng, rc);
    ElementaryFactor f = random_factor(n, rng, rc.alpha_max);
    report.merge(check_theorem_3_1(m, f, cfg));
  }
  return report;
}

PropertyReport run_cor_3_2_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg) {
  SeededRng rng(rc.seed);
  PropertyReport report;
  report.property = "cor3.2";
  report.seed = rc.seed;
  report.digits = cfg.digits;
  for (int t = 0; t < rc.trials; ++t) {
    int n = static_cast<int>(rng.uniform_long(std::max(2, rc.n_min), std::max(2, rc.n_max)));
    RatMatrix m = random_m_for_extremal(n, rng, rc);
    RatMatrix k = random_stochastic_tp(n, rng, rc.alpha_max);
    report.merge(check_corollary_3_2(m, k, cfg));
  }
  return report;
}

PropertyReport run_cor_3_3_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg) {
  SeededRng rng(rc.seed);
  PropertyReport report;
  report.property = "cor3.3";
  report.seed = rc.seed;
  report.digits = cfg.digits;
  std::map<int, std::pair<WeightConverter, WeightConverter>> converters;
  for (int t = 0; t < rc.trials; ++t) {
    int n = static_cast<int>(rng.uniform_long(std::max(1, rc.n_min), std::max(1, rc.n_max)));
    auto it = converters.find(n);
    if (it == converters.end())
      it = converters.emplace(n, std::pair<WeightConverter, WeightConverter>(
                                     {ConversionTarget::DP, n}, {ConversionTarget::SaidBall, n}))
               .first;
    const auto& [to_dp, to_sb] = it->second;
    std::vector<Rational> w, wsb, wdp;
    bool accepted = false;
    // the DP conversion rejects far more often, so it gates the draw
    for (int draw = 0; draw < 10000 && !accepted; ++draw) {
      w = random_weights(n, rng, rc.weight_min, rc.weight_max);
      wdp = to_dp(w);
      if (!all_positive(wdp)) continue;
      wsb = to_sb(w);
      accepted = all_positive(wsb);
    }
    if (!accepted) throw rejection_cap_error();
    BasisSystem mb = BasisSystem::rational_bernstein(n, Rational(0), Rational(1), w);
    BasisSystem b1 = BasisSystem::rational_said_ball(n, wsb);
    BasisSystem b2 = BasisSystem::rational_dp(n, wdp);
    std::vector<Rational> nodes = uniform_interior_nodes(n);
    report.merge(check_corollary_3_3(mb, b1, nodes, cfg));
    report.merge(check_corollary_3_3(mb, b2, nodes, cfg));
  }
  return report;
}

PropertyReport run_wielandt_suite(const RandomModelConfig& rc, const PrecisionConfig& cfg) {
  SeededRng rng(rc.seed);
  PropertyReport report;
  report.property = "wielandt";
  report.seed = rc.seed;
  report.digits = cfg.digits;
  for (int t = 0; t < rc.trials; ++t) {
    int n = static_cast<int>(rng.uniform_long(std::max(2, rc.n_min), std::max(2, rc.n_max)));
    RatMatrix m = random_stochastic_tp(n, rng, rc.alpha_max);
    RatMatrix c = m;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (rng.coin()) c(i, j) = -c(i, j);
    report.merge(check_wielandt(m, c, cfg));
  }
  return report;
}

PropertyReport run_suite(const std::string& name, const RandomModelConfig& rc,
                         const PrecisionConfig& cfg) {
  if (name == "thm3.1") return run_thm_3_1_suite(rc, cfg);
  if (name == "cor3.2") return run_cor_3_2_suite(rc, cfg);
  if (name == "cor3.3") return run_cor_3_3_suite(rc, cfg);
  if (name == "wielandt") return run_wielandt_suite(rc, cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tpb
