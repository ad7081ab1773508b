#pragma once

#include <cstdint>
#include <optional>

#include "angleset/rational.hpp"

namespace angleset::bounds {

/// C(n, k); zero when k > n. Exact.
BigInt binomial(unsigned long n, unsigned long k);

/// Natural log of C(n, k) at the given precision (0 = environment default).
double log_binomial(unsigned long n, unsigned long k, unsigned prec_bits = 0);

/// Σ_{j=⌈ck⌉}^{k} C(k,j)·C(d−k, k−j), the per-edge count of excluded
/// candidates in the greedy construction. Exact.
BigInt bad_denominator(std::uint32_t d, std::uint32_t k, const Rational& c);

/// A(d,k,c) = C(d,k) / bad_denominator(d,k,c): the guaranteed edge count of
/// the full-enumeration greedy run, as an exact rational.
Rational guaranteed_edges(std::uint32_t d, std::uint32_t k, const Rational& c);

/// Certified bigint comparison A(d,k,c) >= r^d, no floating point involved.
bool guaranteed_edges_at_least_power(std::uint32_t d, std::uint32_t k, const Rational& c,
                                     const Rational& r);

/// H(a,b) = -ab·log a - 2(1-a)·log(1-a) + ab·log b + 2a(1-b)·log(1-b)
///          + (1-2a+ab)·log(1-2a+ab),
/// with x·log x -> 0 applied to the (1-b) term at b = 1.
/// Domain: a in (0,1), b in (0,1], 1-2a+ab > 0; violations throw
/// std::domain_error with a diagnostic.
double entropy_H(const Rational& a, const Rational& b, unsigned prec_bits = 0);

/// dH/db = -a·log a + a·log b - 2a·log(1-b) + a·log(1-2a+ab). Domain as
/// entropy_H with b < 1.
double entropy_H_db(const Rational& a, const Rational& b, unsigned prec_bits = 0);

/// (e^{H(c/5, c)} - 1) / c, the growth-rate ratio whose c -> 0 limit is
/// rho_constant().
double entropy_growth_ratio(const Rational& c, unsigned prec_bits = 0);

/// Certified check H(c/5, c) >= log(1 + rho·c) via outward rounding.
bool entropy_inequality_certified(const Rational& c, unsigned prec_bits = 0);

/// log 5 - 8/5 ≈ 0.009438.
double rho_constant(unsigned prec_bits = 0);

struct ChooseKOptions {
  unsigned window = 0;    // 0 = max(3, ceil(0.05 d))
  bool full_scan = false; // scan k = 1..d instead of the window
};

/// The k maximizing guaranteed_edges(d, k, c) over the window centered at
/// round(c·d/5); ties break toward smaller k.
std::uint32_t choose_k(std::uint32_t d, const Rational& c, ChooseKOptions opts = {});

/// (1 + (rho - delta)·c)^d. Requires c in (0,1) and delta in [0, 0.0094).
double lower_envelope(std::uint32_t d, const Rational& c, const Rational& delta,
                      unsigned prec_bits = 0);

/// (1 + 3.75·c)^d. Evaluates for any c in (0,1); the stated hypothesis is
/// c in (0, 0.02) — callers should surface a warning outside it.
double upper_envelope(std::uint32_t d, const Rational& c, unsigned prec_bits = 0);
bool upper_envelope_hypothesis_ok(const Rational& c);

/// sqrt(0.5·π·d^3·cos 2α) / (√2·sin α)^{d-1}. Requires alpha in (0, π/4).
double rankin_asymptotic(double alpha_radians, std::uint32_t d, unsigned prec_bits = 0);

/// sqrt(d / (2(d+1))) and its exact square.
double jung_radius(std::uint32_t d);
Rational jung_radius_sq(std::uint32_t d);

/// d²(1−y)^{−d} (statement form) and d²(1−y)^{1−d} (proof form). The two
/// exponents are both reported; callers choose explicitly.
struct CapCountBound {
  double statement_form;
  double proof_form;
};
CapCountBound cap_count_bound(std::uint32_t d, const Rational& y, unsigned prec_bits = 0);

/// sin(π/3 − 2c) / sin(π/3 + c). Requires c in (0, 0.024).
double sine_ratio_margin(const Rational& c, unsigned prec_bits = 0);

/// Certified check sine_ratio_margin(c) >= 1 - 1.744c via outward rounding.
bool sine_ratio_certified_lower(const Rational& c, unsigned prec_bits = 0);

/// A(d,k,c)^{1/d} for an exact rational A.
double per_dimension_root(const Rational& a_exact, std::uint32_t d, unsigned prec_bits = 0);

/// Relative gap |log C(round(x·n), round(y·n)) − n·F(x,y)| / (n·F(x,y)) with
/// F(x,y) = x·log x − y·log y − (x−y)·log(x−y); shrinks as n grows for
/// 0 < y < x < 1. Numeric consistency probe for the binomial growth regime.
double stirling_regime_gap(double x, double y, unsigned long n, unsigned prec_bits = 0);

struct BoundReport {
  std::uint32_t d = 0;
  std::uint32_t k = 0;
  Rational c;
  Rational a_guess;       // c/5
  double rho = 0;         // log 5 - 8/5
  Rational delta;         // slack used in lower_envelope
  Rational A_exact;       // guaranteed_edges(d, k, c)
  BigInt A_floor;
  BigInt A_ceil;
  double A_per_dim_root = 0;
  double lower_env = 0;
  double upper_env = 0;
  bool upper_env_hypothesis_ok = false;
};

BoundReport make_bound_report(std::uint32_t d, const Rational& c, std::optional<std::uint32_t> k,
                              const Rational& delta, unsigned prec_bits = 0);

}  // namespace angleset::bounds
