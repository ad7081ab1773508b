#include "angleset/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "angleset/env.hpp"
#include "detail/interval.hpp"
#include "detail/real.hpp"

namespace angleset::bounds {

namespace {

using detail::Interval;
using detail::Real;

mpfr_prec_t resolve_prec(unsigned prec_bits) {
  return prec_bits == 0 ? static_cast<mpfr_prec_t>(default_precision_bits())
                        : static_cast<mpfr_prec_t>(prec_bits);
}

void require_construction_domain(std::uint32_t d, std::uint32_t k, const Rational& c) {
  if (d == 0 || k == 0 || k > d) throw std::invalid_argument("need 1 <= k <= d");
  if (c <= 0 || c >= 1) throw std::invalid_argument("need 0 < c < 1");
}

std::uint32_t intersection_cutoff(std::uint32_t k, const Rational& c) {
  return static_cast<std::uint32_t>(ceil_to_int64(Rational(c * k)));
}

struct EntropyTerms {
  // H(a,b) as sum of coef·log(arg) with exact rational coefs and args.
  std::vector<std::pair<Rational, Rational>> terms;
};

EntropyTerms entropy_terms(const Rational& a, const Rational& b) {
  if (a <= 0 || a >= 1) throw std::domain_error("entropy_H: a must be in (0,1), got " + format_fraction(a));
  if (b <= 0 || b > 1) throw std::domain_error("entropy_H: b must be in (0,1], got " + format_fraction(b));
  Rational w = 1 - 2 * a + a * b;
  w.canonicalize();
  if (w <= 0)
    throw std::domain_error("entropy_H: 1-2a+ab must be positive, got " + format_fraction(w));

  EntropyTerms t;
  Rational ab = a * b;
  t.terms.emplace_back(Rational(-ab), a);
  t.terms.emplace_back(Rational(-2 * (1 - a)), Rational(1 - a));
  t.terms.emplace_back(ab, b);
  if (b < 1) t.terms.emplace_back(Rational(2 * a * (1 - b)), Rational(1 - b));  // x·log x -> 0 at b=1
  t.terms.emplace_back(w, w);
  for (auto& [coef, arg] : t.terms) {
    coef.canonicalize();
    arg.canonicalize();
  }
  return t;
}

Real entropy_H_real(const Rational& a, const Rational& b, mpfr_prec_t prec) {
  EntropyTerms t = entropy_terms(a, b);
  Real acc(prec), term(prec);
  mpfr_set_zero(acc.raw(), 1);
  for (const auto& [coef, arg] : t.terms) {
    mpfr_set_q(term.raw(), arg.get_mpq_t(), MPFR_RNDN);
    mpfr_log(term.raw(), term.raw(), MPFR_RNDN);
    mpfr_mul_q(term.raw(), term.raw(), coef.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
  }
  return acc;
}

Interval entropy_H_interval(const Rational& a, const Rational& b, mpfr_prec_t prec) {
  EntropyTerms t = entropy_terms(a, b);
  Interval acc = Interval::of_ui(0, prec);
  for (const auto& [coef, arg] : t.terms)
    acc = acc.add(Interval::of_q(arg, prec).log().mul_q(coef));
  return acc;
}

Interval rho_interval(mpfr_prec_t prec) {
  return Interval::of_ui(5, prec).log().sub(Interval::of_q(Rational(8, 5), prec));
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double log_binomial(unsigned long n, unsigned long k, unsigned prec_bits) {
  if (k > n) throw std::domain_error("log_binomial: k > n");
  BigInt b = binomial(n, k);
  Real r(resolve_prec(prec_bits));
  mpfr_set_z(r.raw(), b.get_mpz_t(), MPFR_RNDN);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  return r.to_double();
}

BigInt bad_denominator(std::uint32_t d, std::uint32_t k, const Rational& c) {
  require_construction_domain(d, k, c);
  std::uint32_t cutoff = intersection_cutoff(k, c);
  BigInt sum = 0;
  for (std::uint32_t j = cutoff; j <= k; ++j)
    sum += binomial(k, j) * binomial(d - k, k - j);
  return sum;
}

Rational guaranteed_edges(std::uint32_t d, std::uint32_t k, const Rational& c) {
  Rational a(binomial(d, k), bad_denominator(d, k, c));
  a.canonicalize();
  return a;
}

bool guaranteed_edges_at_least_power(std::uint32_t d, std::uint32_t k, const Rational& c,
                                     const Rational& r) {
  if (r <= 0) return true;
  BigInt num_pow, den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), r.get_num().get_mpz_t(), d);
  mpz_pow_ui(den_pow.get_mpz_t(), r.get_den().get_mpz_t(), d);
  // C(d,k)/B >= num^d/den^d  <=>  C(d,k)·den^d >= num^d·B
  return binomial(d, k) * den_pow >= num_pow * bad_denominator(d, k, c);
}

double entropy_H(const Rational& a, const Rational& b, unsigned prec_bits) {
  return entropy_H_real(a, b, resolve_prec(prec_bits)).to_double();
}

double entropy_H_db(const Rational& a, const Rational& b, unsigned prec_bits) {
  if (b >= 1) throw std::domain_error("entropy_H_db: b must be below 1");
  entropy_terms(a, b);  // shared domain validation
  mpfr_prec_t prec = resolve_prec(prec_bits);
  // a·(-log a + log b - 2·log(1-b) + log(1-2a+ab))
  Rational w = 1 - 2 * a + a * b;
  w.canonicalize();
  Real acc(prec), term(prec);
  mpfr_set_zero(acc.raw(), 1);
  auto add_log = [&](const Rational& arg, long scale) {
    mpfr_set_q(term.raw(), arg.get_mpq_t(), MPFR_RNDN);
    mpfr_log(term.raw(), term.raw(), MPFR_RNDN);
    mpfr_mul_si(term.raw(), term.raw(), scale, MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
  };
  add_log(a, -1);
  add_log(b, 1);
  add_log(Rational(1 - b), -2);
  add_log(w, 1);
  mpfr_mul_q(acc.raw(), acc.raw(), a.get_mpq_t(), MPFR_RNDN);
  return acc.to_double();
}

double entropy_growth_ratio(const Rational& c, unsigned prec_bits) {
  if (c <= 0 || c >= 1) throw std::domain_error("entropy_growth_ratio: c must be in (0,1)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Rational a = c / 5;
  a.canonicalize();
  Real h = entropy_H_real(a, c, prec);
  mpfr_exp(h.raw(), h.raw(), MPFR_RNDN);
  mpfr_sub_ui(h.raw(), h.raw(), 1, MPFR_RNDN);
  mpfr_div_q(h.raw(), h.raw(), c.get_mpq_t(), MPFR_RNDN);
  return h.to_double();
}

bool entropy_inequality_certified(const Rational& c, unsigned prec_bits) {
  if (c <= 0 || c >= 1) throw std::domain_error("entropy_inequality_certified: c must be in (0,1)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Rational a = c / 5;
  a.canonicalize();
  Interval lhs = entropy_H_interval(a, c, prec);
  Interval rhs = Interval::of_ui(1, prec).add(rho_interval(prec).mul_q(c)).log();
  return lhs.certainly_ge(rhs);
}

double rho_constant(unsigned prec_bits) {
  return rho_interval(resolve_prec(prec_bits)).mid_double();
}

std::uint32_t choose_k(std::uint32_t d, const Rational& c, ChooseKOptions opts) {
  if (d == 0) throw std::invalid_argument("choose_k: d must be positive");
  if (c <= 0 || c >= 1) throw std::invalid_argument("choose_k: c must be in (0,1)");
  std::int64_t lo = 1, hi = d;
  if (!opts.full_scan) {
    Rational center_q = c * d / 5;
    center_q.canonicalize();
    std::int64_t center = round_half_away_to_int64(center_q);
    // The integer argmax drifts from the c*d/5 density estimate by a few
    // percent of d at moderate c; a 2%-wide window misses it on grids as
    // small as d=200, c=0.2. Five percent keeps the windowed argmax equal to
    // the full scan everywhere checked for c <= 0.5, d <= 1000.
    std::int64_t w = opts.window != 0 ? opts.window
                                      : std::max<std::int64_t>(3, (static_cast<std::int64_t>(d) + 19) / 20);
    lo = std::max<std::int64_t>(1, center - w);
    hi = std::min<std::int64_t>(d, center + w);
    if (hi < lo) hi = lo;
  }
  std::uint32_t best_k = static_cast<std::uint32_t>(lo);
  Rational best_a = guaranteed_edges(d, best_k, c);
  for (std::int64_t k = lo + 1; k <= hi; ++k) {
    Rational a = guaranteed_edges(d, static_cast<std::uint32_t>(k), c);
    if (a > best_a) {  // strict: ties keep the smaller k
      best_a = a;
      best_k = static_cast<std::uint32_t>(k);
    }
  }
  return best_k;
}

double lower_envelope(std::uint32_t d, const Rational& c, const Rational& delta,
                      unsigned prec_bits) {
  if (c <= 0 || c >= 1) throw std::invalid_argument("lower_envelope: c must be in (0,1)");
  if (delta < 0 || delta >= Rational(94, 10000))
    throw std::invalid_argument("lower_envelope: delta must be in [0, 0.0094)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Real rate(prec);
  mpfr_log_ui(rate.raw(), 5, MPFR_RNDN);
  Rational offset = Rational(8, 5) + delta;
  offset.canonicalize();
  mpfr_sub_q(rate.raw(), rate.raw(), offset.get_mpq_t(), MPFR_RNDN);
  mpfr_mul_q(rate.raw(), rate.raw(), c.get_mpq_t(), MPFR_RNDN);
  mpfr_add_ui(rate.raw(), rate.raw(), 1, MPFR_RNDN);
  mpfr_pow_ui(rate.raw(), rate.raw(), d, MPFR_RNDN);
  return rate.to_double();
}

double upper_envelope(std::uint32_t d, const Rational& c, unsigned prec_bits) {
  if (d == 0) throw std::invalid_argument("upper_envelope: d must be positive");
  if (c <= 0 || c >= 1) throw std::invalid_argument("upper_envelope: c must be in (0,1)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Rational base = 1 + Rational(15, 4) * c;
  base.canonicalize();
  Real r = Real::of(base, prec);
  mpfr_pow_ui(r.raw(), r.raw(), d, MPFR_RNDN);
  return r.to_double();
}

bool upper_envelope_hypothesis_ok(const Rational& c) {
  return c > 0 && c < Rational(2, 100);
}

double rankin_asymptotic(double alpha_radians, std::uint32_t d, unsigned prec_bits) {
  if (d < 2) throw std::invalid_argument("rankin_asymptotic: d must be at least 2");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  if (!(alpha_radians > 0)) throw std::invalid_argument("rankin_asymptotic: alpha must be positive");
  {
    Interval alpha_i = Interval::of_q(rational_from_double(alpha_radians), prec);
    Interval quarter_pi = Interval::pi(prec).mul_q(Rational(1, 4));
    if (!quarter_pi.certainly_gt(alpha_i))
      throw std::invalid_argument("rankin_asymptotic: alpha must be below pi/4");
  }
  Real alpha = Real::of(alpha_radians, prec);
  Real cos2a(prec);
  mpfr_mul_ui(cos2a.raw(), alpha.raw(), 2, MPFR_RNDN);
  mpfr_cos(cos2a.raw(), cos2a.raw(), MPFR_RNDN);

  Real num(prec);
  mpfr_const_pi(num.raw(), MPFR_RNDN);
  mpfr_div_ui(num.raw(), num.raw(), 2, MPFR_RNDN);
  Real dcube(prec);
  mpfr_set_ui(dcube.raw(), d, MPFR_RNDN);
  mpfr_pow_ui(dcube.raw(), dcube.raw(), 3, MPFR_RNDN);
  mpfr_mul(num.raw(), num.raw(), dcube.raw(), MPFR_RNDN);
  mpfr_mul(num.raw(), num.raw(), cos2a.raw(), MPFR_RNDN);
  mpfr_sqrt(num.raw(), num.raw(), MPFR_RNDN);

  Real den(prec);
  mpfr_sin(den.raw(), alpha.raw(), MPFR_RNDN);
  Real sqrt2(prec);
  mpfr_sqrt_ui(sqrt2.raw(), 2, MPFR_RNDN);
  mpfr_mul(den.raw(), den.raw(), sqrt2.raw(), MPFR_RNDN);
  mpfr_pow_ui(den.raw(), den.raw(), d - 1, MPFR_RNDN);

  mpfr_div(num.raw(), num.raw(), den.raw(), MPFR_RNDN);
  return num.to_double();
}

double jung_radius(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("jung_radius: d must be positive");
  return std::sqrt(static_cast<double>(d) / (2.0 * (static_cast<double>(d) + 1.0)));
}

Rational jung_radius_sq(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("jung_radius_sq: d must be positive");
  Rational r(d, 2 * (static_cast<unsigned long>(d) + 1));
  r.canonicalize();
  return r;
}

CapCountBound cap_count_bound(std::uint32_t d, const Rational& y, unsigned prec_bits) {
  if (d < 2) throw std::invalid_argument("cap_count_bound: d must be at least 2");
  if (y <= 0 || y >= 1) throw std::invalid_argument("cap_count_bound: y must be in (0,1)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Rational base = 1 - y;
  base.canonicalize();
  auto form = [&](long exponent) {
    Real r = Real::of(base, prec);
    mpfr_pow_si(r.raw(), r.raw(), exponent, MPFR_RNDN);
    mpfr_mul_ui(r.raw(), r.raw(), static_cast<unsigned long>(d) * d, MPFR_RNDN);
    return r.to_double();
  };
  return CapCountBound{form(-static_cast<long>(d)), form(1 - static_cast<long>(d))};
}

double sine_ratio_margin(const Rational& c, unsigned prec_bits) {
  if (c <= 0 || c >= Rational(24, 1000))
    throw std::domain_error("sine_ratio_margin: c must be in (0, 0.024)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Real third_pi(prec);
  mpfr_const_pi(third_pi.raw(), MPFR_RNDN);
  mpfr_div_ui(third_pi.raw(), third_pi.raw(), 3, MPFR_RNDN);
  Real num(prec), den(prec);
  Rational two_c = 2 * c;
  mpfr_sub_q(num.raw(), third_pi.raw(), two_c.get_mpq_t(), MPFR_RNDN);
  mpfr_sin(num.raw(), num.raw(), MPFR_RNDN);
  mpfr_add_q(den.raw(), third_pi.raw(), c.get_mpq_t(), MPFR_RNDN);
  mpfr_sin(den.raw(), den.raw(), MPFR_RNDN);
  mpfr_div(num.raw(), num.raw(), den.raw(), MPFR_RNDN);
  return num.to_double();
}

bool sine_ratio_certified_lower(const Rational& c, unsigned prec_bits) {
  if (c <= 0 || c >= Rational(24, 1000))
    throw std::domain_error("sine_ratio_certified_lower: c must be in (0, 0.024)");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Interval third_pi = Interval::pi(prec).mul_q(Rational(1, 3));
  // Both angles stay inside (0, pi/2) on this c-domain, where sin increases.
  Interval num = third_pi.sub(Interval::of_q(2 * c, prec)).sin_increasing();
  Interval den = third_pi.add(Interval::of_q(c, prec)).sin_increasing();
  Interval ratio = num.div_positive(den);
  Rational floor_val = 1 - Rational(1744, 1000) * c;
  floor_val.canonicalize();
  return ratio.certainly_ge(Interval::of_q(floor_val, prec));
}

double per_dimension_root(const Rational& a_exact, std::uint32_t d, unsigned prec_bits) {
  if (d == 0) throw std::invalid_argument("per_dimension_root: d must be positive");
  if (a_exact <= 0) throw std::invalid_argument("per_dimension_root: A must be positive");
  mpfr_prec_t prec = resolve_prec(prec_bits);
  Real r = Real::of(a_exact, prec);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  mpfr_div_ui(r.raw(), r.raw(), d, MPFR_RNDN);
  mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
  return r.to_double();
}

double stirling_regime_gap(double x, double y, unsigned long n, unsigned prec_bits) {
  if (!(0 < y && y < x && x < 1)) throw std::invalid_argument("stirling_regime_gap: need 0 < y < x < 1");
  if (n == 0) throw std::invalid_argument("stirling_regime_gap: n must be positive");
  unsigned long a = static_cast<unsigned long>(std::lround(x * static_cast<double>(n)));
  unsigned long b = static_cast<unsigned long>(std::lround(y * static_cast<double>(n)));
  double log_c = log_binomial(a, b, prec_bits);
  double f = x * std::log(x) - y * std::log(y) - (x - y) * std::log(x - y);
  double target = static_cast<double>(n) * f;
  return std::abs(log_c - target) / target;
}

BoundReport make_bound_report(std::uint32_t d, const Rational& c, std::optional<std::uint32_t> k,
                              const Rational& delta, unsigned prec_bits) {
  BoundReport r;
  r.d = d;
  r.c = c;
  r.k = k.has_value() ? *k : choose_k(d, c);
  r.a_guess = c / 5;
  r.a_guess.canonicalize();
  r.rho = rho_constant(prec_bits);
  r.delta = delta;
  r.A_exact = guaranteed_edges(d, r.k, c);
  mpz_fdiv_q(r.A_floor.get_mpz_t(), r.A_exact.get_num().get_mpz_t(), r.A_exact.get_den().get_mpz_t());
  mpz_cdiv_q(r.A_ceil.get_mpz_t(), r.A_exact.get_num().get_mpz_t(), r.A_exact.get_den().get_mpz_t());
  r.A_per_dim_root = per_dimension_root(r.A_exact, d, prec_bits);
  r.lower_env = lower_envelope(d, c, delta, prec_bits);
  r.upper_env = upper_envelope(d, c, prec_bits);
  r.upper_env_hypothesis_ok = upper_envelope_hypothesis_ok(c);
  return r;
}

}  // namespace angleset::bounds
