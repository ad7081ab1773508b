#include "angleset/threshold.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

#include "angleset/env.hpp"
#include "detail/interval.hpp"

namespace angleset {

namespace {

using detail::Interval;

int sign_of(const Rational& q) { return sgn(q); }

// cos∠ vs sigma·sqrt(t2) for rational t2 >= 0 and sigma in {-1, 0, +1}
// (sigma 0 only with t2 == 0). Exact.
Cmp compare_cos_to_signed_sqrt(const Rational& dot, const Rational& a_sq, const Rational& b_sq,
                               const Rational& t2, int sigma) {
  int sd = sign_of(dot);
  if (t2 == 0) sigma = 0;
  if (sd != sigma) return sd < sigma ? Cmp::Less : Cmp::Greater;
  if (sd == 0) return Cmp::Equal;
  Rational lhs = dot * dot;
  Rational rhs = t2 * a_sq * b_sq;
  int c = cmp(lhs, rhs);
  if (c == 0) return Cmp::Equal;
  bool greater_sq = c > 0;
  bool greater = (sd > 0) ? greater_sq : !greater_sq;
  return greater ? Cmp::Greater : Cmp::Less;
}

// The angle α as an interval of radians, guaranteed inside (0, π].
Interval alpha_interval(const AngleSpec& spec, mpfr_prec_t prec) {
  switch (spec.kind) {
    case AngleSpec::Kind::PiThirdPlusC:
      return Interval::pi(prec).mul_q(Rational(1, 3)).add(Interval::of_q(spec.value, prec));
    case AngleSpec::Kind::Radians:
      return Interval::of_q(spec.value, prec);
    case AngleSpec::Kind::Degrees: {
      Rational turns = spec.value / 180;
      turns.canonicalize();
      return Interval::pi(prec).mul_q(turns);
    }
  }
  throw std::logic_error("alpha_interval: bad kind");
}

void validate_spec(const AngleSpec& spec) {
  const Rational& v = spec.value;
  switch (spec.kind) {
    case AngleSpec::Kind::PiThirdPlusC:
      // π/3 + c must stay inside (0, π); checked against the interval below.
      if (v < 0) throw std::invalid_argument("alpha: c must be non-negative");
      break;
    case AngleSpec::Kind::Radians:
      if (v <= 0) throw std::invalid_argument("alpha: radians must be positive");
      break;
    case AngleSpec::Kind::Degrees:
      if (v <= 0 || v > 180) throw std::invalid_argument("alpha: degrees must be in (0, 180]");
      break;
  }
}

}  // namespace

Cmp compare_cos_to_rational(const Rational& dot, const Rational& a_sq, const Rational& b_sq,
                            const Rational& t) {
  if (a_sq <= 0 || b_sq <= 0) throw std::invalid_argument("compare_cos: degenerate side length");
  return compare_cos_to_signed_sqrt(dot, a_sq, b_sq, Rational(t * t), sign_of(t));
}

AngleThreshold::AngleThreshold(const AngleSpec& spec, unsigned base_prec_bits) : spec_(spec) {
  validate_spec(spec);
  unsigned base = std::max(128u, base_prec_bits == 0 ? default_precision_bits() : base_prec_bits);

  // Exact rails: thresholds whose cos (or cos²) is rational. For any decimal
  // degree input these are exactly the values with rational cos², so every
  // other case below falls to irrational enclosures.
  if (spec.kind == AngleSpec::Kind::PiThirdPlusC && spec.value == 0) {
    exact_cos_ = Rational(1, 2);
  } else if (spec.kind == AngleSpec::Kind::Degrees) {
    const Rational& g = spec.value;
    if (g == 60) exact_cos_ = Rational(1, 2);
    else if (g == 90) exact_cos_ = Rational(0);
    else if (g == 120) exact_cos_ = Rational(-1, 2);
    else if (g == 180) exact_cos_ = Rational(-1);
    else if (g == 45) exact_cos_sq_ = {Rational(1, 2), +1};
    else if (g == 135) exact_cos_sq_ = {Rational(1, 2), -1};
    else if (g == 30) exact_cos_sq_ = {Rational(3, 4), +1};
    else if (g == 150) exact_cos_sq_ = {Rational(3, 4), -1};
  }

  // Domain check and enclosure tiers. Even rail thresholds go through the
  // first tier once to fill in the double-precision fields.
  for (unsigned tier = 0; tier < 3; ++tier) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(base << tier);
    Interval alpha = alpha_interval(spec_, prec);
    if (tier == 0) {
      Interval pi = Interval::pi(prec);
      bool is_pi_degrees = spec_.kind == AngleSpec::Kind::Degrees && spec_.value == 180;
      if (!is_pi_degrees) {
        if (!pi.certainly_gt(alpha))
          throw std::invalid_argument("alpha must lie strictly inside (0, pi)");
        if (mpfr_sgn(alpha.lo.raw()) <= 0)
          throw std::invalid_argument("alpha must be positive");
      }
      alpha_radians_ = alpha.mid_double();
    }
    Interval cosa = alpha.cos_decreasing();
    enclosures_.emplace_back(cosa.lo.to_rational(), cosa.hi.to_rational());
    if (tier == 0) cos_alpha_ = cosa.mid_double();
    if (has_exact_cos()) break;  // rails never consult the enclosures
  }
  if (exact_cos_) cos_alpha_ = exact_cos_->get_d();
}

Cmp AngleThreshold::compare_cos(const Rational& dot, const Rational& a_sq,
                                const Rational& b_sq) const {
  if (a_sq <= 0 || b_sq <= 0) throw std::invalid_argument("compare_cos: degenerate side length");
  if (exact_cos_)
    return compare_cos_to_rational(dot, a_sq, b_sq, *exact_cos_);
  if (exact_cos_sq_)
    return compare_cos_to_signed_sqrt(dot, a_sq, b_sq, exact_cos_sq_->first, exact_cos_sq_->second);

  for (const auto& [lo, hi] : enclosures_) {
    // cos α sits strictly inside (lo, hi): it is irrational, the bounds are
    // rational, so equality with either endpoint is impossible.
    Cmp vs_lo = compare_cos_to_rational(dot, a_sq, b_sq, lo);
    if (vs_lo != Cmp::Greater) return Cmp::Less;
    Cmp vs_hi = compare_cos_to_rational(dot, a_sq, b_sq, hi);
    if (vs_hi != Cmp::Less) return Cmp::Greater;
  }
  return Cmp::Undecided;
}

Cmp AngleThreshold::compare_angle(const Rational& dot, const Rational& a_sq,
                                  const Rational& b_sq) const {
  switch (compare_cos(dot, a_sq, b_sq)) {
    case Cmp::Less: return Cmp::Greater;
    case Cmp::Greater: return Cmp::Less;
    case Cmp::Equal: return Cmp::Equal;
    case Cmp::Undecided: return Cmp::Undecided;
  }
  return Cmp::Undecided;
}

}  // namespace angleset
