#pragma once

// Minimal interval arithmetic over mpfr with outward rounding. Only the
// operations the certified checks need; every function keeps the invariant
// lo <= true value <= hi.

#include <mpfr.h>

#include <stdexcept>

#include "detail/real.hpp"

namespace angleset::detail {

struct Interval {
  Real lo, hi;

  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  static Interval of_q(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.raw(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static Interval of_ui(unsigned long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_ui(r.lo.raw(), v, MPFR_RNDD);
    mpfr_set_ui(r.hi.raw(), v, MPFR_RNDU);
    return r;
  }
  static Interval pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo.raw(), MPFR_RNDD);
    mpfr_const_pi(r.hi.raw(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return lo.prec(); }

  Interval add(const Interval& o) const {
    Interval r(prec());
    mpfr_add(r.lo.raw(), lo.raw(), o.lo.raw(), MPFR_RNDD);
    mpfr_add(r.hi.raw(), hi.raw(), o.hi.raw(), MPFR_RNDU);
    return r;
  }
  Interval sub(const Interval& o) const {
    Interval r(prec());
    mpfr_sub(r.lo.raw(), lo.raw(), o.hi.raw(), MPFR_RNDD);
    mpfr_sub(r.hi.raw(), hi.raw(), o.lo.raw(), MPFR_RNDU);
    return r;
  }

  /// Multiplication by an exact rational scalar.
  Interval mul_q(const mpq_class& q) const {
    Interval r(prec());
    if (sgn(q) >= 0) {
      mpfr_mul_q(r.lo.raw(), lo.raw(), q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(r.hi.raw(), hi.raw(), q.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_mul_q(r.lo.raw(), hi.raw(), q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(r.hi.raw(), lo.raw(), q.get_mpq_t(), MPFR_RNDU);
    }
    return r;
  }

  /// General interval product.
  Interval mul(const Interval& o) const {
    Interval r(prec());
    Real best_lo(prec()), best_hi(prec()), t(prec());
    bool first = true;
    mpfr_srcptr mine[2] = {lo.raw(), hi.raw()};
    mpfr_srcptr theirs[2] = {o.lo.raw(), o.hi.raw()};
    for (auto a : mine)
      for (auto b : theirs) {
        mpfr_mul(t.raw(), a, b, MPFR_RNDD);
        if (first || mpfr_cmp(t.raw(), best_lo.raw()) < 0) mpfr_set(best_lo.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul(t.raw(), a, b, MPFR_RNDU);
        if (first || mpfr_cmp(t.raw(), best_hi.raw()) > 0) mpfr_set(best_hi.raw(), t.raw(), MPFR_RNDU);
        first = false;
      }
    r.lo = best_lo;
    r.hi = best_hi;
    return r;
  }

  /// Quotient; requires a strictly positive divisor interval.
  Interval div_positive(const Interval& o) const {
    if (mpfr_sgn(o.lo.raw()) <= 0) throw std::domain_error("interval division by non-positive interval");
    Interval r(prec());
    mpfr_div(r.lo.raw(), lo.raw(), o.hi.raw(), MPFR_RNDD);
    mpfr_div(r.hi.raw(), hi.raw(), o.lo.raw(), MPFR_RNDU);
    return r;
  }

  /// Natural log; requires a strictly positive interval.
  Interval log() const {
    if (mpfr_sgn(lo.raw()) <= 0) throw std::domain_error("interval log of non-positive interval");
    Interval r(prec());
    mpfr_log(r.lo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_log(r.hi.raw(), hi.raw(), MPFR_RNDU);
    return r;
  }

  Interval exp() const {
    Interval r(prec());
    mpfr_exp(r.lo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_exp(r.hi.raw(), hi.raw(), MPFR_RNDU);
    return r;
  }

  /// sin, valid on intervals inside [0, pi/2] where sin is increasing.
  Interval sin_increasing() const {
    Interval r(prec());
    mpfr_sin(r.lo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_sin(r.hi.raw(), hi.raw(), MPFR_RNDU);
    return r;
  }

  /// cos, valid on intervals inside [0, pi] where cos is decreasing.
  Interval cos_decreasing() const {
    Interval r(prec());
    mpfr_cos(r.lo.raw(), hi.raw(), MPFR_RNDD);
    mpfr_cos(r.hi.raw(), lo.raw(), MPFR_RNDU);
    return r;
  }

  bool certainly_ge(const Interval& o) const { return mpfr_cmp(lo.raw(), o.hi.raw()) >= 0; }
  bool certainly_gt(const Interval& o) const { return mpfr_cmp(lo.raw(), o.hi.raw()) > 0; }

  double mid_double() const {
    Real m(prec());
    mpfr_add(m.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
    mpfr_div_ui(m.raw(), m.raw(), 2, MPFR_RNDN);
    return m.to_double();
  }
};

}  // namespace angleset::detail
