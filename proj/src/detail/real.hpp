#pragma once

// Thin RAII holder for mpfr_t with explicit per-value precision. Arithmetic
// stays in plain mpfr_* calls on raw() so rounding modes are always visible
// at the call site; this is deliberately not a full numeric wrapper.

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace angleset::detail {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static Real of(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }
  static Real of(double x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_d(r.v_, x, rnd);
    return r;
  }
  static Real of(unsigned long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
  }

  /// Exact rational value (mpfr numbers are dyadic). Requires a finite value.
  mpq_class to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    q.canonicalize();
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace angleset::detail
