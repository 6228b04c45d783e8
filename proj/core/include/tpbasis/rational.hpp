#pragma once

// Exact rational scalars. Values are kept in canonical form (reduced,
// positive denominator); every helper below preserves that invariant.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tpb {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "p/q", optional leading sign on p.
inline Rational parse_rational(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);  // gmp rejects the explicit plus
  Rational q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("unparseable rational: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Rational pow_int(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // canonical since base is
}

inline std::vector<Rational> parse_rational_list(const std::vector<std::string>& parts) {
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

}  // namespace tpb
