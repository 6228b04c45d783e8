#pragma once

// Arbitrary-precision decimal scalars on top of MPFR. A Decimal carries its
// own working precision; binary operations widen to the larger operand's
// precision. PrecisionConfig expresses precision as significant decimal
// digits and adds guard digits for internal work.

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "tpbasis/rational.hpp"

namespace tpb {

struct PrecisionConfig {
  int digits = 100;

  static constexpr int kMinDigits = 16;
  static constexpr int kGuardDigits = 15;

  PrecisionConfig() = default;
  explicit PrecisionConfig(int d) : digits(d) {
    if (d < kMinDigits)
      throw std::invalid_argument("precision below 16 digits");
  }

  // bits needed for digits + guard decimal digits (log2(10) ~ 3.3220)
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>((digits + kGuardDigits) * 3.3220 + 8);
  }
};

class Decimal {
 public:
  Decimal() { mpfr_init2(v_, PrecisionConfig().bits()); mpfr_set_zero(v_, 1); }
  explicit Decimal(const PrecisionConfig& cfg) {
    mpfr_init2(v_, cfg.bits());
    mpfr_set_zero(v_, 1);
  }
  Decimal(long x, const PrecisionConfig& cfg = {}) {
    mpfr_init2(v_, cfg.bits());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Decimal(const Rational& q, const PrecisionConfig& cfg = {}) {
    mpfr_init2(v_, cfg.bits());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Decimal(const std::string& s, const PrecisionConfig& cfg = {}) {
    mpfr_init2(v_, cfg.bits());
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && !is_inf_string(s))
      throw std::invalid_argument("unparseable decimal: " + s);
  }

  Decimal(const Decimal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Decimal(Decimal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Decimal& operator=(const Decimal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Decimal& operator=(Decimal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Decimal() { mpfr_clear(v_); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }
  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  static Decimal pi(const PrecisionConfig& cfg = {});
  static Decimal infinity(int sign = 1, const PrecisionConfig& cfg = {});
  // 10^e at the given precision
  static Decimal pow10(long e, const PrecisionConfig& cfg = {});

  // The stored value, exactly (every finite Decimal is a dyadic rational).
  Rational to_exact_rational() const;

  // Scientific notation with explicit sign and `digits` significant digits.
  std::string to_string(int digits) const;
  std::string to_string(const PrecisionConfig& cfg) const { return to_string(cfg.digits); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Decimal operator+(const Decimal& a, const Decimal& b) {
    Decimal r = wider(a, b);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Decimal operator-(const Decimal& a, const Decimal& b) {
    Decimal r = wider(a, b);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Decimal operator*(const Decimal& a, const Decimal& b) {
    Decimal r = wider(a, b);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Decimal operator/(const Decimal& a, const Decimal& b) {
    Decimal r = wider(a, b);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Decimal operator-() const {
    Decimal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  Decimal& operator+=(const Decimal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Decimal& operator-=(const Decimal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Decimal& operator*=(const Decimal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Decimal& operator/=(const Decimal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator==(const Decimal& a, const Decimal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Decimal& a, const Decimal& b) { return !(a == b); }
  friend bool operator<(const Decimal& a, const Decimal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Decimal& a, const Decimal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Decimal& a, const Decimal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Decimal& a, const Decimal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  static Decimal wider(const Decimal& a, const Decimal& b) {
    Decimal r;
    mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    return r;
  }
  static bool is_inf_string(const std::string& s) {
    return s == "inf" || s == "+inf" || s == "-inf";
  }
  mpfr_t v_;
};

Decimal abs(const Decimal& x);
Decimal sqrt(const Decimal& x);
Decimal sin(const Decimal& x);
Decimal cos(const Decimal& x);
Decimal exp(const Decimal& x);
Decimal log(const Decimal& x);

inline Decimal rational_to_decimal(const Rational& q, const PrecisionConfig& cfg = {}) {
  return Decimal(q, cfg);
}

// Comparison slack for quantities computed at cfg.digits: 10^(-digits+10).
inline Decimal comparison_tolerance(const PrecisionConfig& cfg) {
  return Decimal::pow10(-cfg.digits + 10, cfg);
}

}  // namespace tpb
