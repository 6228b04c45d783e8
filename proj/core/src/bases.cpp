#include "tpbasis/bases.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpb {

namespace {

void require_positive_weights(const std::vector<Rational>& w, std::size_t dim) {
  if (w.size() != dim) throw std::invalid_argument("weight count does not match basis dimension");
  for (const auto& x : w)
    if (sgn(x) <= 0) throw std::invalid_argument("weights must be strictly positive");
}

void require_nondecreasing(const std::vector<Rational>& knots) {
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    if (knots[i] > knots[i + 1]) throw std::invalid_argument("knots must be nondecreasing");
}

// number of basis functions for a knot vector and degree
int bspline_count(int degree, const std::vector<Rational>& knots) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  int count = static_cast<int>(knots.size()) - degree - 1;
  if (count < 1) throw std::invalid_argument("too few knots for the degree");
  return count;
}

Decimal dec_pow(const Decimal& x, int e, const PrecisionConfig& cfg) {
  Decimal r(1L, cfg);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::string kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Bernstein: return "bernstein";
    case BasisKind::RationalBernstein: return "rational-bernstein";
    case BasisKind::SaidBall: return "said-ball";
    case BasisKind::RationalSaidBall: return "rational-said-ball";
    case BasisKind::DP: return "dp";
    case BasisKind::RationalDP: return "rational-dp";
    case BasisKind::BSpline: return "bspline";
    case BasisKind::NURBS: return "nurbs";
    case BasisKind::CosineEven: return "cosine-even";
    case BasisKind::TrigPoly: return "trig-poly";
  }
  throw std::logic_error("unreachable");
}

BasisKind kind_from_name(const std::string& s) {
  for (BasisKind k : {BasisKind::Bernstein, BasisKind::RationalBernstein, BasisKind::SaidBall,
                      BasisKind::RationalSaidBall, BasisKind::DP, BasisKind::RationalDP,
                      BasisKind::BSpline, BasisKind::NURBS, BasisKind::CosineEven,
                      BasisKind::TrigPoly})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown basis kind: " + s);
}

BasisSystem BasisSystem::bernstein(int n, Rational a, Rational b) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (a >= b) throw std::invalid_argument("interval needs a < b");
  BasisSystem s;
  s.kind = BasisKind::Bernstein;
  s.n = n;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

BasisSystem BasisSystem::rational_bernstein(int n, Rational a, Rational b, std::vector<Rational> w) {
  BasisSystem s = bernstein(n, std::move(a), std::move(b));
  require_positive_weights(w, static_cast<std::size_t>(n) + 1);
  s.kind = BasisKind::RationalBernstein;
  s.weights = std::move(w);
  return s;
}

BasisSystem BasisSystem::said_ball(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  BasisSystem s;
  s.kind = BasisKind::SaidBall;
  s.n = n;
  return s;
}

BasisSystem BasisSystem::rational_said_ball(int n, std::vector<Rational> w) {
  BasisSystem s = said_ball(n);
  require_positive_weights(w, static_cast<std::size_t>(n) + 1);
  s.kind = BasisKind::RationalSaidBall;
  s.weights = std::move(w);
  return s;
}

BasisSystem BasisSystem::dp(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  BasisSystem s;
  s.kind = BasisKind::DP;
  s.n = n;
  return s;
}

BasisSystem BasisSystem::rational_dp(int n, std::vector<Rational> w) {
  BasisSystem s = dp(n);
  require_positive_weights(w, static_cast<std::size_t>(n) + 1);
  s.kind = BasisKind::RationalDP;
  s.weights = std::move(w);
  return s;
}

BasisSystem BasisSystem::bspline(int degree, std::vector<Rational> knots) {
  require_nondecreasing(knots);
  int count = bspline_count(degree, knots);
  BasisSystem s;
  s.kind = BasisKind::BSpline;
  s.degree = degree;
  s.n = count - 1;
  if (knots[static_cast<std::size_t>(degree)] >= knots[knots.size() - 1 - degree])
    throw std::invalid_argument("empty evaluation domain");
  s.knots = std::move(knots);
  return s;
}

BasisSystem BasisSystem::nurbs(int degree, std::vector<Rational> knots, std::vector<Rational> w) {
  BasisSystem s = bspline(degree, std::move(knots));
  require_positive_weights(w, static_cast<std::size_t>(s.n) + 1);
  s.kind = BasisKind::NURBS;
  s.weights = std::move(w);
  return s;
}

BasisSystem BasisSystem::cosine_even(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  BasisSystem s;
  s.kind = BasisKind::CosineEven;
  s.n = n;
  return s;
}

BasisSystem BasisSystem::trig_poly(int n, Rational half_width) {
  if (n < 1) throw std::invalid_argument("degree below 1");
  if (sgn(half_width) <= 0) throw std::invalid_argument("half width must be positive");
  // A < pi/2, checked numerically; A is rational and pi/2 is not, so the
  // comparison is strict at any precision
  PrecisionConfig probe{30};
  if (!(rational_to_decimal(half_width, probe) < Decimal::pi(probe) / Decimal(2L, probe)))
    throw std::invalid_argument("half width must be below pi/2");
  BasisSystem s;
  s.kind = BasisKind::TrigPoly;
  s.n = n;
  s.half_width = std::move(half_width);
  return s;
}

int BasisSystem::dimension() const {
  return kind == BasisKind::TrigPoly ? 2 * n + 1 : n + 1;
}

bool BasisSystem::polynomial_backend() const {
  return kind != BasisKind::CosineEven && kind != BasisKind::TrigPoly;
}

Rational BasisSystem::domain_lo() const {
  switch (kind) {
    case BasisKind::Bernstein:
    case BasisKind::RationalBernstein: return a;
    case BasisKind::SaidBall:
    case BasisKind::RationalSaidBall:
    case BasisKind::DP:
    case BasisKind::RationalDP: return Rational(0);
    case BasisKind::BSpline:
    case BasisKind::NURBS: return knots[static_cast<std::size_t>(degree)];
    default: throw std::invalid_argument("trigonometric domain is not rational");
  }
}

Rational BasisSystem::domain_hi() const {
  switch (kind) {
    case BasisKind::Bernstein:
    case BasisKind::RationalBernstein: return b;
    case BasisKind::SaidBall:
    case BasisKind::RationalSaidBall:
    case BasisKind::DP:
    case BasisKind::RationalDP: return Rational(1);
    case BasisKind::BSpline:
    case BasisKind::NURBS: return knots[knots.size() - 1 - static_cast<std::size_t>(degree)];
    default: throw std::invalid_argument("trigonometric domain is not rational");
  }
}

std::pair<Decimal, Decimal> decimal_domain(const BasisSystem& basis, const PrecisionConfig& cfg) {
  switch (basis.kind) {
    case BasisKind::CosineEven:
      return {Decimal(0L, cfg), Decimal::pi(cfg)};
    case BasisKind::TrigPoly: {
      Decimal aw = rational_to_decimal(basis.half_width, cfg);
      return {-aw, aw};
    }
    default:
      return {rational_to_decimal(basis.domain_lo(), cfg),
              rational_to_decimal(basis.domain_hi(), cfg)};
  }
}

Json BasisSystem::to_json() const {
  Json j;
  j["kind"] = kind_name(kind);
  j["n"] = n;
  switch (kind) {
    case BasisKind::Bernstein:
    case BasisKind::RationalBernstein:
      j["a"] = to_string(a);
      j["b"] = to_string(b);
      break;
    case BasisKind::BSpline:
    case BasisKind::NURBS: {
      j["degree"] = degree;
      Json ks = Json::array();
      for (const auto& k : knots) ks.push_back(to_string(k));
      j["knots"] = std::move(ks);
      break;
    }
    case BasisKind::TrigPoly:
      j["half_width"] = to_string(half_width);
      break;
    default: break;
  }
  if (!weights.empty()) {
    Json ws = Json::array();
    for (const auto& w : weights) ws.push_back(to_string(w));
    j["weights"] = std::move(ws);
  }
  return j;
}

BasisSystem BasisSystem::from_json(const Json& j) {
  BasisKind kind = kind_from_name(j.at("kind").get<std::string>());
  int n = j.at("n").get<int>();
  auto rat_list = [&](const char* key) {
    std::vector<Rational> v;
    for (const auto& e : j.at(key)) v.push_back(parse_rational(e.get<std::string>()));
    return v;
  };
  switch (kind) {
    case BasisKind::Bernstein:
      return bernstein(n, parse_rational(j.at("a").get<std::string>()),
                       parse_rational(j.at("b").get<std::string>()));
    case BasisKind::RationalBernstein:
      return rational_bernstein(n, parse_rational(j.at("a").get<std::string>()),
                                parse_rational(j.at("b").get<std::string>()), rat_list("weights"));
    case BasisKind::SaidBall: return said_ball(n);
    case BasisKind::RationalSaidBall: return rational_said_ball(n, rat_list("weights"));
    case BasisKind::DP: return dp(n);
    case BasisKind::RationalDP: return rational_dp(n, rat_list("weights"));
    case BasisKind::BSpline: return bspline(j.at("degree").get<int>(), rat_list("knots"));
    case BasisKind::NURBS:
      return nurbs(j.at("degree").get<int>(), rat_list("knots"), rat_list("weights"));
    case BasisKind::CosineEven: return cosine_even(n);
    case BasisKind::TrigPoly:
      return trig_poly(n, parse_rational(j.at("half_width").get<std::string>()));
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<Rational> bernstein_values(int n, const Rational& a, const Rational& b,
                                       const Rational& t) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  Rational len = b - a;
  Rational scale = pow_int(len, n);
  for (int i = 0; i <= n; ++i)
    out[static_cast<std::size_t>(i)] =
        Rational(binomial(n, i)) * pow_int(b - t, n - i) * pow_int(t - a, i) / scale;
  return out;
}

std::vector<Rational> said_ball_values(int n, const Rational& t) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  Rational omt = 1 - t;
  int h = n / 2;
  for (int i = 0; i <= n; ++i) {
    Rational v;
    if (2 * i <= n - 1)
      v = Rational(binomial(h + i, i)) * pow_int(t, i) * pow_int(omt, h + 1);
    else if (i >= h + 1)
      v = Rational(binomial(h + n - i, n - i)) * pow_int(t, h + 1) * pow_int(omt, n - i);
    else  // n even, i == n/2
      v = Rational(binomial(n, h)) * pow_int(t, h) * pow_int(omt, h);
    out[static_cast<std::size_t>(i)] = std::move(v);
  }
  return out;
}

std::vector<Rational> dp_values(int n, const Rational& t) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  Rational omt = 1 - t;
  // shared middle bracket; exponent floor(n/2)+1 in both parities
  int e = n / 2 + 1;
  Rational bracket = 1 - pow_int(t, e) - pow_int(omt, e);
  for (int i = 0; i <= n; ++i) {
    Rational v;
    if (i == 0)
      v = pow_int(omt, n);
    else if (i == n)
      v = pow_int(t, n);
    else if (i <= n / 2 - 1)
      v = t * pow_int(omt, n - i);
    else if (i >= (n + 1) / 2 + 1)
      v = pow_int(t, i) * omt;
    else if (n % 2 == 0)  // i == n/2
      v = bracket;
    else if (i == (n - 1) / 2)
      v = t * pow_int(omt, (n + 1) / 2) + bracket / 2;
    else  // i == (n+1)/2
      v = bracket / 2 + pow_int(t, (n + 1) / 2) * omt;
    out[static_cast<std::size_t>(i)] = std::move(v);
  }
  return out;
}

std::vector<Rational> weighted(const std::vector<Rational>& base,
                               const std::vector<Rational>& w) {
  std::vector<Rational> out(base.size());
  Rational den(0);
  for (std::size_t i = 0; i < base.size(); ++i) den += w[i] * base[i];
  if (sgn(den) == 0) throw std::logic_error("rational basis denominator vanished");
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = w[i] * base[i] / den;
  return out;
}

}  // namespace

std::vector<Rational> bspline_basis(int degree, const std::vector<Rational>& knots,
                                    const Rational& t) {
  require_nondecreasing(knots);
  bspline_count(degree, knots);  // validates degree against the knot count
  std::size_t d = static_cast<std::size_t>(degree);
  std::size_t kn = knots.size();
  const Rational& lo = knots[d];
  const Rational& hi = knots[kn - 1 - d];
  if (t < lo || t > hi) throw std::domain_error("point outside the B-spline domain");
  bool at_right = (t == hi);

  // level 0: interval indicators; at the right end, their left limits
  std::vector<Rational> cur(kn - 1);
  for (std::size_t i = 0; i + 1 < kn; ++i) {
    bool hit = at_right ? (knots[i] < t && t <= knots[i + 1])
                        : (knots[i] <= t && t < knots[i + 1]);
    cur[i] = hit ? Rational(1) : Rational(0);
  }
  for (int k = 1; k <= degree; ++k) {
    std::vector<Rational> next(kn - 1 - static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < next.size(); ++i) {
      Rational v(0);
      Rational den1 = knots[i + k] - knots[i];
      if (sgn(den1) != 0) v += (t - knots[i]) / den1 * cur[i];
      Rational den2 = knots[i + k + 1] - knots[i + 1];
      if (sgn(den2) != 0) v += (knots[i + k + 1] - t) / den2 * cur[i + 1];
      next[i] = std::move(v);
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> evaluate(const BasisSystem& basis, const Rational& t) {
  switch (basis.kind) {
    case BasisKind::Bernstein:
    case BasisKind::RationalBernstein: {
      if (t < basis.a || t > basis.b) throw std::domain_error("point outside [a,b]");
      auto base = bernstein_values(basis.n, basis.a, basis.b, t);
      return basis.kind == BasisKind::Bernstein ? base : weighted(base, basis.weights);
    }
    case BasisKind::SaidBall:
    case BasisKind::RationalSaidBall: {
      if (sgn(t) < 0 || t > 1) throw std::domain_error("point outside [0,1]");
      auto base = said_ball_values(basis.n, t);
      return basis.kind == BasisKind::SaidBall ? base : weighted(base, basis.weights);
    }
    case BasisKind::DP:
    case BasisKind::RationalDP: {
      if (sgn(t) < 0 || t > 1) throw std::domain_error("point outside [0,1]");
      auto base = dp_values(basis.n, t);
      return basis.kind == BasisKind::DP ? base : weighted(base, basis.weights);
    }
    case BasisKind::BSpline:
      return bspline_basis(basis.degree, basis.knots, t);
    case BasisKind::NURBS:
      return weighted(bspline_basis(basis.degree, basis.knots, t), basis.weights);
    default:
      throw std::invalid_argument("trigonometric basis needs decimal points");
  }
}

std::vector<Decimal> evaluate(const BasisSystem& basis, const Decimal& t,
                              const PrecisionConfig& cfg) {
  if (basis.polynomial_backend()) {
    // decimal points are dyadic, so this detour is exact
    std::vector<Rational> exact = evaluate(basis, t.to_exact_rational());
    std::vector<Decimal> out;
    out.reserve(exact.size());
    for (const auto& v : exact) out.push_back(rational_to_decimal(v, cfg));
    return out;
  }

  Decimal tol = comparison_tolerance(cfg);
  auto [lo, hi] = decimal_domain(basis, cfg);
  if (t < lo - tol || t > hi + tol) throw std::domain_error("point outside the basis domain");

  Decimal two(2L, cfg);
  std::vector<Decimal> out;
  if (basis.kind == BasisKind::CosineEven) {
    int n = basis.n;
    Decimal c2 = cos(t / two), s2 = sin(t / two);
    c2 *= c2;
    s2 *= s2;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      out.push_back(Decimal(Rational(binomial(n, i)), cfg) * dec_pow(c2, n - i, cfg) *
                    dec_pow(s2, i, cfg));
    return out;
  }

  // trigonometric polynomial basis of dimension m+1, m = 2n
  int n = basis.n, m = 2 * n;
  Decimal aw = rational_to_decimal(basis.half_width, cfg);
  Decimal sa = sin(aw);
  Decimal sp = sin((aw + t) / two) / sa;
  Decimal sm = sin((aw - t) / two) / sa;
  Decimal twocos = two * cos(aw);
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    Decimal di(cfg);
    for (int k = 0; k <= i / 2; ++k) {
      Integer coef = binomial(n, i - k) * binomial(i - k, k);
      if (sgn(coef) == 0) continue;
      di += Decimal(Rational(coef), cfg) * dec_pow(twocos, i - 2 * k, cfg);
    }
    out.push_back(di * dec_pow(sp, i, cfg) * dec_pow(sm, m - i, cfg));
  }
  return out;
}

BasisSystem rationalize(const BasisSystem& base, std::vector<Rational> weights) {
  switch (base.kind) {
    case BasisKind::Bernstein:
      return BasisSystem::rational_bernstein(base.n, base.a, base.b, std::move(weights));
    case BasisKind::SaidBall:
      return BasisSystem::rational_said_ball(base.n, std::move(weights));
    case BasisKind::DP:
      return BasisSystem::rational_dp(base.n, std::move(weights));
    case BasisKind::BSpline:
      return BasisSystem::nurbs(base.degree, base.knots, std::move(weights));
    default:
      throw std::invalid_argument("basis kind does not take weights");
  }
}

}  // namespace tpb
