#include "tpbasis/decimal.hpp"

#include <cstring>
#include <memory>

namespace tpb {

Decimal Decimal::pi(const PrecisionConfig& cfg) {
  Decimal r(cfg);
  mpfr_const_pi(r.raw(), MPFR_RNDN);  // MPFR caches the constant per precision
  return r;
}

Decimal Decimal::infinity(int sign, const PrecisionConfig& cfg) {
  Decimal r(cfg);
  mpfr_set_inf(r.raw(), sign);
  return r;
}

Decimal Decimal::pow10(long e, const PrecisionConfig& cfg) {
  Decimal r(cfg);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

Rational Decimal::to_exact_rational() const {
  if (is_nan() || is_inf())
    throw std::domain_error("no exact rational for non-finite decimal");
  if (is_zero()) return Rational(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational q(m);
  if (e >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= Rational(p);
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= Rational(p);
  }
  q.canonicalize();
  return q;
}

std::string Decimal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* s = nullptr;
  mpfr_asprintf(&s, "%+.*Re", digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Decimal abs(const Decimal& x) {
  Decimal r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Decimal sqrt(const Decimal& x) {
  Decimal r(x);
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Decimal sin(const Decimal& x) {
  Decimal r(x);
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Decimal cos(const Decimal& x) {
  Decimal r(x);
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Decimal exp(const Decimal& x) {
  Decimal r(x);
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Decimal log(const Decimal& x) {
  Decimal r(x);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace tpb
