#include "tpbasis/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpb {

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

// Integer Horner on the cleared form, so deep-bisection points stay cheap:
// sign(p(a/b)) = sign(sum_k C_k a^k b^(n-k)) for b > 0.
int Poly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const Poly p = integer_scaled();
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = p.c_.back().get_num();
  Integer bp(1);
  for (std::size_t k = p.c_.size() - 1; k-- > 0;) {
    bp *= b;
    acc = acc * a + p.c_[k].get_num() * bp;
  }
  return sgn(acc);
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) s[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) s[k] += b.c_[k];
  return Poly(std::move(s));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) s[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) s[k] -= b.c_[k];
  return Poly(std::move(s));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(p));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> p(c_);
  for (auto& v : p) v *= s;
  return Poly(std::move(p));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem(c_);
  int dq = degree() - d.degree();
  if (dq < 0) return {Poly(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(dq) + 1, Rational(0));
  for (int k = dq; k >= 0; --k) {
    std::size_t top = static_cast<std::size_t>(k + d.degree());
    if (top >= rem.size() || sgn(rem[top]) == 0) continue;
    Rational f = rem[top] / d.leading();
    quo[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * d.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::divide_exact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly Poly::integer_scaled() const {
  if (is_zero()) return *this;
  Integer den_lcm(1);
  for (const auto& v : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  Integer content(0);
  std::vector<Rational> out(c_);
  for (auto& v : out) {
    v *= Rational(den_lcm);
    v.canonicalize();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
  }
  for (auto& v : out) {
    v /= Rational(content);
    v.canonicalize();
  }
  return Poly(std::move(out));
}

Poly Poly::primitive() const {
  Poly p = integer_scaled();
  if (!p.is_zero() && sgn(p.c_.back()) < 0)
    for (auto& v : p.c_) v = -v;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.primitive();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("square-free decomposition of a constant");
  std::vector<std::pair<Poly, int>> out;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) {
    out.emplace_back(p.primitive(), 1);
    return out;
  }
  Poly w = p.divide_exact(g);
  Poly y = p.derivative().divide_exact(g);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly gi = poly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = w.divide_exact(gi);
    y = z.divide_exact(gi);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(0);
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// Sturm chain, each member scaled to integer coefficients (signs intact).
std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  chain.push_back(f.integer_scaled());
  chain.push_back(f.derivative().integer_scaled());
  while (chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back((-r).integer_scaled());
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

// number of distinct roots of square-free f in (a, b); requires f(a), f(b) != 0
int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootLocation> isolate_squarefree(const Poly& f, int multiplicity) {
  std::vector<RootLocation> found;
  if (f.degree() < 1) return found;
  Rational b = root_bound(f) + 1;
  Rational a = -b;
  auto chain = sturm_chain(f);
  int total = sturm_count(chain, a, b);

  struct Span { Rational lo, hi; int count; };
  std::vector<Span> work{{a, b, total}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 && f.sign_at(s.lo) * f.sign_at(s.hi) < 0) {
      RootLocation loc;
      loc.lo = s.lo;
      loc.hi = s.hi;
      loc.multiplicity = multiplicity;
      loc.factor = f;
      found.push_back(std::move(loc));
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (f.sign_at(mid) == 0) {
      // Bisection landed on a root. Deflate and redo the quotient from
      // scratch; partial results for f would double-count its other roots.
      Poly lin({-mid, Rational(1)});
      auto rest = isolate_squarefree(f.divide_exact(lin), multiplicity);
      RootLocation loc;
      loc.exact = true;
      loc.root = mid;
      loc.multiplicity = multiplicity;
      loc.factor = f;
      rest.push_back(std::move(loc));
      return rest;
    }
    int left = sturm_count(chain, s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.count - left});
  }
  return found;
}

Integer rational_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// Smallest-denominator rational in [lo, hi] by the continued-fraction walk.
Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_in(-hi, -lo);
  // 0 < lo <= hi; build the answer from the shared continued-fraction prefix
  Rational a = lo, b = hi;
  std::vector<Integer> terms;
  while (true) {
    Integer n = rational_floor(a);
    if (a == Rational(n)) {  // endpoint is the simplest candidate here
      terms.push_back(n);
      break;
    }
    if (Rational(n + 1) <= b) {
      terms.push_back(n + 1);
      break;
    }
    terms.push_back(n);
    Rational ra = Rational(1) / (b - Rational(n));  // note the swap
    b = Rational(1) / (a - Rational(n));
    a = ra;
  }
  Rational r(terms.back());
  for (std::size_t k = terms.size() - 1; k-- > 0;) r = Rational(terms[k]) + Rational(1) / r;
  return r;
}

}  // namespace

std::vector<RootLocation> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  std::vector<RootLocation> out;
  if (p.degree() == 0) return out;

  // peel off x^k
  Poly q = p;
  int zero_mult = 0;
  while (q.degree() >= 1 && sgn(q.coeff(0)) == 0) {
    std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = Poly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) {
    RootLocation loc;
    loc.exact = true;
    loc.root = Rational(0);
    loc.multiplicity = zero_mult;
    loc.factor = Poly::x();
    out.push_back(std::move(loc));
  }
  if (q.degree() >= 1)
    for (const auto& [f, m] : squarefree_decomposition(q)) {
      auto part = isolate_squarefree(f, m);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

int count_real_roots(const Poly& p) {
  int total = 0;
  for (const auto& loc : isolate_real_roots(p)) total += loc.multiplicity;
  return total;
}

Rational refine_root(const RootLocation& loc, const Rational& width) {
  if (loc.exact) return loc.root;
  Rational lo = loc.lo, hi = loc.hi;
  int slo = loc.factor.sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = loc.factor.sign_at(mid);
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  // a rational root is eventually the simplest rational in its bracket;
  // one extra sign test turns "within width" into "exact" for those
  Rational s = simplest_in(lo, hi);
  if (lo < s && s < hi && loc.factor.sign_at(s) == 0) return s;
  return (lo + hi) / 2;
}

std::vector<Decimal> real_roots(const Poly& p, const PrecisionConfig& cfg) {
  auto locs = isolate_real_roots(p);
  Rational width = pow_int(Rational(1, 10), static_cast<unsigned long>(cfg.digits + 5));
  Rational scale = root_bound(p);
  if (scale > 1) width *= scale;

  std::vector<std::pair<Rational, int>> refined;
  for (const auto& loc : locs) refined.emplace_back(refine_root(loc, width), loc.multiplicity);
  std::sort(refined.begin(), refined.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<Decimal> roots;
  for (const auto& [r, m] : refined)
    for (int k = 0; k < m; ++k) roots.emplace_back(r, cfg);
  return roots;
}

}  // namespace tpb
