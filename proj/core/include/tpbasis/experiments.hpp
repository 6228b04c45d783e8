#pragma once

// Table-experiment protocol and the two-direction counterexample search over
// the collocation triples (rational Bernstein vs rational Said-Ball and DP at
// interior nodes), plus table rendering in the 5-significant-digit style.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpbasis/decimal.hpp"
#include "tpbasis/harness.hpp"
#include "tpbasis/rational.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

struct ExperimentRow {
  int n = 0;
  std::string label;  // "M" (rational Bernstein), "B1" (Said-Ball), "B2" (DP)
  Decimal lambda_min, sigma_min, sigma_max;
  Rational kappa_inf;
  Decimal kappa_2;
  std::vector<Rational> w_bernstein, w_said_ball, w_dp;  // the shared triple
  std::uint64_t seed = 0;
  int digits = 0;

  Json to_json() const;
  static ExperimentRow from_json(const Json& j);
};

struct TableRun {
  std::vector<ExperimentRow> rows;          // 3 per n: M, B1, B2
  std::map<int, int> draws_per_n;           // weight draws until acceptance
  std::vector<std::string> violations;      // inequality breaches (empty on success)

  Json to_json() const;
};

// One triple per n: draw integer weights until both conversions are positive
// (cap 10000 draws), collocate at i/(n+2), compute the spectral quantities,
// and assert the expected orderings within each triple.
TableRun run_table_experiment(int n_lo, int n_hi, const RandomModelConfig& rc,
                              const PrecisionConfig& cfg);

enum class CompareQuantity { SigmaMax, Kappa2 };

CompareQuantity quantity_from_name(const std::string& s);  // "sigma-max" | "kappa2"
std::string quantity_name(CompareQuantity q);

struct CounterexampleSearch {
  std::string quantity;
  int budget = 0;
  int draws_used = 0;
  // one instance per direction: M's value strictly larger / strictly smaller
  // than some B's
  std::optional<Json> larger, smaller;
  std::vector<std::string> violations;  // ordering breaches seen on the way

  bool complete() const { return larger && smaller; }
  Json to_json() const;
};

// Repeats the table protocol draw by draw until both directions appear or the
// budget runs out (non-fatal: partial findings are reported).
CounterexampleSearch search_counterexamples(CompareQuantity q, int budget,
                                            const RandomModelConfig& rc,
                                            const PrecisionConfig& cfg);

// "2.9940e-2" style: 5 significant digits, bare exponent
std::string format_sci5(const Decimal& v);

// format: "csv" | "json" | "text"; throws on empty rows
std::string emit_tables(const std::vector<ExperimentRow>& rows, const std::string& format);

}  // namespace tpb
