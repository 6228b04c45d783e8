#include "tpbasis/experiments.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tpbasis/collocation.hpp"
#include "tpbasis/conversion.hpp"
#include "tpbasis/spectral.hpp"

namespace tpb {

namespace {

Json weights_json(const std::vector<Rational>& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> weights_from_json(const Json& j) {
  std::vector<Rational> w;
  for (const auto& e : j) w.push_back(parse_rational(e.get<std::string>()));
  return w;
}

}  // namespace

Json ExperimentRow::to_json() const {
  Json j;
  j["n"] = n;
  j["label"] = label;
  j["lambda_min"] = lambda_min.to_string(digits);
  j["sigma_min"] = sigma_min.to_string(digits);
  j["sigma_max"] = sigma_max.to_string(digits);
  j["kappa_inf"] = to_string(kappa_inf);
  j["kappa_2"] = kappa_2.to_string(digits);
  j["weights"] = Json{{"bernstein", weights_json(w_bernstein)},
                      {"said_ball", weights_json(w_said_ball)},
                      {"dp", weights_json(w_dp)}};
  j["seed"] = seed;
  j["digits"] = digits;
  return j;
}

ExperimentRow ExperimentRow::from_json(const Json& j) {
  ExperimentRow r;
  r.n = j.at("n").get<int>();
  r.label = j.at("label").get<std::string>();
  r.digits = j.at("digits").get<int>();
  PrecisionConfig cfg{r.digits};
  r.lambda_min = Decimal(j.at("lambda_min").get<std::string>(), cfg);
  r.sigma_min = Decimal(j.at("sigma_min").get<std::string>(), cfg);
  r.sigma_max = Decimal(j.at("sigma_max").get<std::string>(), cfg);
  r.kappa_inf = parse_rational(j.at("kappa_inf").get<std::string>());
  r.kappa_2 = Decimal(j.at("kappa_2").get<std::string>(), cfg);
  r.w_bernstein = weights_from_json(j.at("weights").at("bernstein"));
  r.w_said_ball = weights_from_json(j.at("weights").at("said_ball"));
  r.w_dp = weights_from_json(j.at("weights").at("dp"));
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

Json TableRun::to_json() const {
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : rows) j["rows"].push_back(r.to_json());
  Json d = Json::object();
  for (const auto& [n, c] : draws_per_n) d[std::to_string(n)] = c;
  j["draws_per_n"] = std::move(d);
  j["violations"] = violations;
  return j;
}

namespace {

struct Triple {
  int n = 0;
  std::vector<Rational> w, wsb, wdp;
  int draws = 0;
  ExperimentRow rows[3];
};

// weight draws with positivity rejection, then the three collocation
// matrices and their spectral quantities
Triple build_triple(int n, SeededRng& rng, const RandomModelConfig& rc,
                    const PrecisionConfig& cfg, std::vector<std::string>* violations) {
  Triple t;
  t.n = n;
  // the DP conversion rejects far more often, so it gates each draw
  WeightConverter to_dp(ConversionTarget::DP, n), to_sb(ConversionTarget::SaidBall, n);
  bool accepted = false;
  for (; t.draws < 10000 && !accepted; ) {
    ++t.draws;
    t.w = random_weights(n, rng, rc.weight_min, rc.weight_max);
    t.wdp = to_dp(t.w);
    if (!all_positive(t.wdp)) continue;
    t.wsb = to_sb(t.w);
    accepted = all_positive(t.wsb);
  }
  if (!accepted) throw rejection_cap_error();

  // re-verify the conversion identity exactly at n+2 points
  BasisSystem mb = BasisSystem::rational_bernstein(n, Rational(0), Rational(1), t.w);
  BasisSystem bplain = BasisSystem::bernstein(n);
  BasisSystem splain = BasisSystem::said_ball(n);
  BasisSystem dplain = BasisSystem::dp(n);
  for (int j = 0; j <= n + 1; ++j) {
    Rational pt = rat(j, n + 1);
    Rational ref = weighted_value(bplain, t.w, pt);
    if (weighted_value(splain, t.wsb, pt) != ref || weighted_value(dplain, t.wdp, pt) != ref)
      throw std::logic_error("conversion identity failed to re-verify");
  }

  BasisSystem bases[3] = {mb, BasisSystem::rational_said_ball(n, t.wsb),
                          BasisSystem::rational_dp(n, t.wdp)};
  const char* labels[3] = {"M", "B1", "B2"};
  std::vector<Rational> nodes = uniform_interior_nodes(n);
  Decimal tol = Decimal::pow10(-cfg.digits + 15, cfg);
  Decimal one(1L, cfg);

  for (int b = 0; b < 3; ++b) {
    RatMatrix m = collocation_matrix(bases[b], nodes);
    ExperimentRow& row = t.rows[b];
    row.n = n;
    row.label = labels[b];
    row.digits = cfg.digits;
    row.w_bernstein = t.w;
    row.w_said_ball = t.wsb;
    row.w_dp = t.wdp;

    std::vector<Decimal> eig = eigenvalues(m, cfg);
    row.lambda_min = eig.front();
    if (violations && abs(eig.back() - one) > tol)
      violations->push_back("lambda_max(" + std::string(labels[b]) + "^" + std::to_string(n) +
                            ") != 1");
    std::vector<Decimal> sv = singular_values(m, cfg);
    row.sigma_min = sv.front();
    row.sigma_max = sv.back();
    auto ki = cond_inf(m);
    if (!ki) throw std::runtime_error("collocation matrix unexpectedly singular");
    row.kappa_inf = *ki;
    row.kappa_2 = row.sigma_max / row.sigma_min;
  }

  if (violations) {
    for (int b = 1; b < 3; ++b) {
      std::string tag = std::string(t.rows[b].label) + "^" + std::to_string(n);
      if (t.rows[0].lambda_min < t.rows[b].lambda_min - tol)
        violations->push_back("lambda_min(M^" + std::to_string(n) + ") < lambda_min(" + tag + ")");
      if (t.rows[0].sigma_min < t.rows[b].sigma_min - tol)
        violations->push_back("sigma_min(M^" + std::to_string(n) + ") < sigma_min(" + tag + ")");
      if (t.rows[0].kappa_inf > t.rows[b].kappa_inf)
        violations->push_back("kappa_inf(M^" + std::to_string(n) + ") > kappa_inf(" + tag + ")");
    }
  }
  return t;
}

}  // namespace

TableRun run_table_experiment(int n_lo, int n_hi, const RandomModelConfig& rc,
                              const PrecisionConfig& cfg) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
  SeededRng rng(rc.seed);
  TableRun run;
  for (int n = n_lo; n <= n_hi; ++n) {
    Triple t = build_triple(n, rng, rc, cfg, &run.violations);
    run.draws_per_n[n] = t.draws;
    for (auto& row : t.rows) {
      row.seed = rc.seed;
      run.rows.push_back(std::move(row));
    }
  }
  return run;
}

CompareQuantity quantity_from_name(const std::string& s) {
  if (s == "sigma-max") return CompareQuantity::SigmaMax;
  if (s == "kappa2") return CompareQuantity::Kappa2;
  throw std::invalid_argument("unknown quantity: " + s);
}

std::string quantity_name(CompareQuantity q) {
  return q == CompareQuantity::SigmaMax ? "sigma-max" : "kappa2";
}

Json CounterexampleSearch::to_json() const {
  Json j;
  j["quantity"] = quantity;
  j["budget"] = budget;
  j["draws_used"] = draws_used;
  j["larger"] = larger ? *larger : Json(nullptr);
  j["smaller"] = smaller ? *smaller : Json(nullptr);
  j["status"] = complete() ? "complete" : "budget exhausted";
  j["violations"] = violations;
  return j;
}

CounterexampleSearch search_counterexamples(CompareQuantity q, int budget,
                                            const RandomModelConfig& rc,
                                            const PrecisionConfig& cfg) {
  CounterexampleSearch s;
  s.quantity = quantity_name(q);
  s.budget = budget;
  SeededRng rng(rc.seed);
  int n_lo = std::max(1, rc.n_min), n_hi = std::max(n_lo, rc.n_max);
  Decimal tol = Decimal::pow10(-cfg.digits + 15, cfg);

  int n = n_lo;
  while (s.draws_used < budget && !s.complete()) {
    ++s.draws_used;
    int this_n = n;
    n = (n >= n_hi) ? n_lo : n + 1;  // cycle through the range
    Triple t;
    try {
      t = build_triple(this_n, rng, rc, cfg, &s.violations);
    } catch (const rejection_cap_error&) {
      continue;  // no positive weights found at this n; the draw is spent
    }

    for (int b = 1; b < 3 && !s.complete(); ++b) {
      const Decimal& vm = q == CompareQuantity::SigmaMax ? t.rows[0].sigma_max : t.rows[0].kappa_2;
      const Decimal& vb = q == CompareQuantity::SigmaMax ? t.rows[b].sigma_max : t.rows[b].kappa_2;
      auto instance = [&]() {
        return Json{{"n", t.n},
                    {"other", t.rows[b].label},
                    {"value_m", vm.to_string(30)},
                    {"value_other", vb.to_string(30)},
                    {"row_m", t.rows[0].to_json()},
                    {"row_other", t.rows[b].to_json()}};
      };
      if (!s.larger && vm > vb + tol) s.larger = instance();
      if (!s.smaller && vm < vb - tol) s.smaller = instance();
    }
  }
  return s;
}

std::string format_sci5(const Decimal& v) {
  // 5 significant digits, exponent without padding or plus sign
  std::string raw = v.to_string(5);  // like "+2.9940e-02"
  std::string out;
  if (!raw.empty() && raw[0] == '+') raw.erase(raw.begin());
  std::size_t e = raw.find('e');
  if (e == std::string::npos) return raw;  // inf / nan
  out = raw.substr(0, e);
  std::string exp = raw.substr(e + 1);
  bool neg = !exp.empty() && exp[0] == '-';
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) exp.erase(exp.begin());
  while (exp.size() > 1 && exp[0] == '0') exp.erase(exp.begin());
  out += "e";
  if (neg) out += "-";
  out += exp;
  return out;
}

namespace {

struct QuantityColumn {
  const char* title;
  std::string (*get)(const ExperimentRow&);
};

std::string fmt_lambda_min(const ExperimentRow& r) { return format_sci5(r.lambda_min); }
std::string fmt_sigma_min(const ExperimentRow& r) { return format_sci5(r.sigma_min); }
std::string fmt_sigma_max(const ExperimentRow& r) { return format_sci5(r.sigma_max); }
std::string fmt_kappa_inf(const ExperimentRow& r) {
  return format_sci5(rational_to_decimal(r.kappa_inf, PrecisionConfig{16}));
}
std::string fmt_kappa_2(const ExperimentRow& r) { return format_sci5(r.kappa_2); }

const QuantityColumn kQuantities[] = {
    {"lambda_min", fmt_lambda_min}, {"sigma_min", fmt_sigma_min}, {"sigma_max", fmt_sigma_max},
    {"kappa_inf", fmt_kappa_inf},   {"kappa_2", fmt_kappa_2},
};

}  // namespace

std::string emit_tables(const std::vector<ExperimentRow>& rows, const std::string& format) {
  if (rows.empty()) throw std::invalid_argument("no rows to emit");

  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(r.to_json());
    return j.dump(2) + "\n";
  }

  if (format == "csv") {
    std::ostringstream os;
    os << "n,label,lambda_min,sigma_min,sigma_max,kappa_inf,kappa_2\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.label;
      for (const auto& q : kQuantities) os << ',' << q.get(r);
      os << '\n';
    }
    return os.str();
  }

  if (format == "text") {
    // one table per quantity: rows over n, columns M / B1 / B2
    std::vector<int> ns;
    for (const auto& r : rows)
      if (ns.empty() || ns.back() != r.n) ns.push_back(r.n);
    auto find_row = [&](int n, const std::string& label) -> const ExperimentRow* {
      for (const auto& r : rows)
        if (r.n == n && r.label == label) return &r;
      return nullptr;
    };
    std::ostringstream os;
    for (const auto& q : kQuantities) {
      os << q.title << '\n';
      os << "  n";
      for (const char* label : {"M", "B1", "B2"})
        os << "  " << label << std::string(11, ' ');
      os << '\n';
      for (int n : ns) {
        os << "  " << n;
        for (const char* label : {"M", "B1", "B2"}) {
          const ExperimentRow* r = find_row(n, label);
          std::string cell = r ? q.get(*r) : "-";
          os << "  " << cell;
          if (cell.size() < 12) os << std::string(12 - cell.size(), ' ');
        }
        os << '\n';
      }
      os << '\n';
    }
    return os.str();
  }

  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace tpb
