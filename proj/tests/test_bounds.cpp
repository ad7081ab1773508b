#include <doctest.h>

#include <cmath>
#include <random>

#include "angleset/bounds.hpp"

using namespace angleset;
namespace b = angleset::bounds;

namespace {

// Independent binomial via the multiplicative formula (different route than
// the library's mpz_bin_uiui).
BigInt binom_oracle(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    r /= i;
  }
  return r;
}

BigInt bad_denominator_oracle(unsigned d, unsigned k, unsigned cutoff) {
  BigInt sum = 0;
  for (unsigned j = cutoff; j <= k; ++j) sum += binom_oracle(k, j) * binom_oracle(d - k, k - j);
  return sum;
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(b::binomial(30, 3) == 4060);
  CHECK(b::binomial(5, 7) == 0);
  CHECK(b::binomial(0, 0) == 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    unsigned long n = rng() % 300, k = rng() % 310;
    CHECK(b::binomial(n, k) == binom_oracle(n, k));
  }
}

TEST_CASE("bad_denominator matches hand-derived values") {
  CHECK(b::bad_denominator(10, 2, parse_decimal("0.6")) == 1);
  CHECK(b::bad_denominator(6, 3, parse_decimal("0.5")) == 10);  // 9 + 1
  for (unsigned d : {1u, 3u, 7u})
    CHECK(b::bad_denominator(d, d, parse_decimal("0.37")) == 1);  // only j = k survives

  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    unsigned d = 2 + rng() % 40;
    unsigned k = 1 + rng() % d;
    Rational c(1 + static_cast<long>(rng() % 99), 100);
    unsigned cutoff = static_cast<unsigned>(ceil_to_int64(Rational(c * k)));
    CHECK(b::bad_denominator(d, k, c) == bad_denominator_oracle(d, k, cutoff));
  }
}

TEST_CASE("guaranteed_edges exact values and reconstruction") {
  CHECK(b::guaranteed_edges(4, 2, parse_decimal("0.5")) == Rational(6, 5));
  CHECK(b::guaranteed_edges(6, 3, parse_decimal("0.5")) == 2);
  CHECK(b::guaranteed_edges(9, 9, parse_decimal("0.2")) == 1);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    unsigned d = 2 + rng() % 40;
    unsigned k = 1 + rng() % d;
    Rational c(1 + static_cast<long>(rng() % 99), 100);
    Rational a = b::guaranteed_edges(d, k, c);
    CHECK(a > 0);
    CHECK(Rational(a * b::bad_denominator(d, k, c)) == Rational(b::binomial(d, k)));
  }
}

TEST_CASE("entropy_H domain handling") {
  CHECK_THROWS_AS(b::entropy_H(Rational(0), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(b::entropy_H(Rational(1), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(b::entropy_H(Rational(1, 4), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(b::entropy_H(Rational(1, 4), Rational(11, 10)), std::domain_error);
  // 1 - 2a + ab <= 0
  CHECK_THROWS_AS(b::entropy_H(parse_decimal("0.6"), parse_decimal("0.2")), std::domain_error);
  CHECK_NOTHROW(b::entropy_H(parse_decimal("0.3"), Rational(1)));  // b = 1 is allowed
}

TEST_CASE("entropy_H at b=1 reduces to the binary entropy") {
  // With b = 1 the (1-b) term vanishes and the rest collapses to
  // -a log a - (1-a) log(1-a).
  for (double av : {0.05, 0.2, 0.4, 0.7}) {
    Rational a = parse_decimal(std::to_string(av).c_str());
    double ad = a.get_d();
    double expected = -ad * std::log(ad) - (1 - ad) * std::log(1 - ad);
    CHECK(b::entropy_H(a, Rational(1)) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("entropy_H reference value and certified inequality") {
  // Independent double-precision evaluation with a different arrangement.
  Rational a = parse_decimal("0.04"), c = parse_decimal("0.2");
  double ad = 0.04, bd = 0.2;
  double w = 1 - 2 * ad + ad * bd;
  double expected = -ad * bd * std::log(ad) - 2 * (1 - ad) * std::log1p(-ad) +
                    ad * bd * std::log(bd) + 2 * ad * (1 - bd) * std::log1p(-bd) +
                    w * std::log(w);
  CHECK(b::entropy_H(a, c) == doctest::Approx(expected).epsilon(1e-12));

  // H(c/5, c) >= log(1 + rho c) holds above a crossover near c = 0.058 and
  // genuinely fails below it: H(c/5, c) is quadratic in c while the right
  // side is linear.
  CHECK(b::entropy_inequality_certified(c));
  for (const char* cv : {"0.06", "0.1", "0.3", "0.5", "0.7", "0.9"})
    CHECK(b::entropy_inequality_certified(parse_decimal(cv)));
  for (const char* cv : {"0.001", "0.01", "0.05"})
    CHECK(!b::entropy_inequality_certified(parse_decimal(cv)));
}

TEST_CASE("growth ratio vanishes linearly with a pinned slope") {
  double rho = b::rho_constant();
  CHECK(rho == doctest::Approx(std::log(5.0) - 1.6).epsilon(1e-12));
  CHECK(rho == doctest::Approx(0.009438).epsilon(1e-4));

  // Small-c expansion: H(c/5, c) = ((log 5 - 4/5)/5) c^2 + O(c^3), so the
  // growth ratio (e^H - 1)/c decays like 0.1618876 c.
  const double slope = (std::log(5.0) - 0.8) / 5.0;
  CHECK(b::entropy_growth_ratio(Rational(1, 1000000)) ==
        doctest::Approx(slope * 1e-6).epsilon(1e-5));
  CHECK(b::entropy_growth_ratio(Rational(1, 10000)) ==
        doctest::Approx(slope * 1e-4).epsilon(1e-3));

  // the ratio crosses the rate constant between c = 0.05 and c = 0.06
  CHECK(b::entropy_growth_ratio(parse_decimal("0.05")) < rho);
  CHECK(b::entropy_growth_ratio(parse_decimal("0.06")) > rho);
}

TEST_CASE("entropy_H_db stationary point, positivity, finite differences") {
  std::mt19937_64 rng(21);
  SUBCASE("H(a, a) is identically zero and the derivative vanishes there") {
    for (int t = 0; t < 50; ++t) {
      Rational a(1 + static_cast<long>(rng() % 299), 1000);  // (0, 0.3)
      CHECK(std::abs(b::entropy_H(a, a)) < 1e-30);
      CHECK(std::abs(b::entropy_H_db(a, a)) < 1e-12);
    }
  }
  SUBCASE("positive beyond c when a <= c") {
    for (int t = 0; t < 40; ++t) {
      long c_millis = 50 + static_cast<long>(rng() % 700);   // c in (0.05, 0.75)
      Rational c(c_millis, 1000);
      Rational a(1 + static_cast<long>(rng() % c_millis), 1000);  // a <= c
      for (int step = 1; step <= 8; ++step) {
        Rational bq = c + (1 - c) * step / 9;  // grid of b in (c, 1)
        bq.canonicalize();
        CHECK(b::entropy_H_db(a, bq) > 0);
      }
    }
  }
  SUBCASE("matches central finite differences of entropy_H") {
    Rational h(1, 1000000);
    for (int t = 0; t < 200; ++t) {
      Rational a(1 + static_cast<long>(rng() % 449), 1000);   // (0, 0.45)
      Rational bq(2 + static_cast<long>(rng() % 996), 1000);  // (0, 1) interior
      double fd = (b::entropy_H(a, bq + h) - b::entropy_H(a, bq - h)) / (2 * h.get_d());
      double an = b::entropy_H_db(a, bq);
      CHECK(std::abs(fd - an) <= 1e-6 * std::max(1e-12, std::abs(an)));
    }
  }
}

TEST_CASE("choose_k window and clamps") {
  CHECK(b::choose_k(5, parse_decimal("0.1")) == 1);
  // windowed argmax equals the full scan
  for (unsigned d : {20u, 50u, 100u, 200u}) {
    for (const char* cv : {"0.05", "0.2", "0.35", "0.5"}) {
      Rational c = parse_decimal(cv);
      CHECK(b::choose_k(d, c) == b::choose_k(d, c, {.window = 0, .full_scan = true}));
    }
  }
  // explicit example: center round(100*0.2/5) = 4
  Rational c02 = parse_decimal("0.2");
  unsigned k100 = b::choose_k(100, c02);
  Rational best = b::guaranteed_edges(100, k100, c02);
  for (unsigned k = 1; k <= 100; ++k) CHECK(best >= b::guaranteed_edges(100, k, c02));
}

TEST_CASE("choose_k windowed equals full scan at d=1000") {
  Rational c = parse_decimal("0.5");
  CHECK(b::choose_k(1000, c) == b::choose_k(1000, c, {.window = 0, .full_scan = true}));
}

TEST_CASE("envelopes") {
  Rational zero(0);
  CHECK(b::lower_envelope(7, Rational(1, 1000000000), zero) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(b::upper_envelope(3, Rational(1, 1000000000)) == doctest::Approx(1.0).epsilon(1e-7));

  // d=200, c=0.2, delta=0 against an independent double-precision route
  double rho = std::log(5.0) - 1.6;
  double expected = std::exp(200 * std::log1p(rho * 0.2));
  CHECK(b::lower_envelope(200, parse_decimal("0.2"), zero) ==
        doctest::Approx(expected).epsilon(1e-12));

  // slack close to the growth rate degenerates toward 1
  CHECK(b::lower_envelope(200, parse_decimal("0.2"), parse_decimal("0.00939")) < 1.002);
  CHECK_THROWS_AS(b::lower_envelope(10, parse_decimal("0.2"), parse_decimal("0.0094")),
                  std::invalid_argument);
  CHECK_THROWS_AS(b::lower_envelope(10, parse_decimal("0.2"), parse_decimal("-0.001")),
                  std::invalid_argument);

  CHECK(b::upper_envelope(10, parse_decimal("0.02")) ==
        doctest::Approx(std::pow(1.075, 10)).epsilon(1e-12));
  CHECK(b::upper_envelope(1, parse_decimal("0.004")) == doctest::Approx(1.015).epsilon(1e-12));
  CHECK(b::upper_envelope_hypothesis_ok(parse_decimal("0.019")));
  CHECK(!b::upper_envelope_hypothesis_ok(parse_decimal("0.02")));
  CHECK(!b::upper_envelope_hypothesis_ok(parse_decimal("0.5")));
}

TEST_CASE("rankin asymptotic formula") {
  const double pi = std::acos(-1.0);
  // alpha = pi/6, d = 10, against a direct double evaluation
  double expected = std::sqrt(0.25 * pi * 1000.0) / std::pow(std::sqrt(2.0) * 0.5, 9);
  CHECK(b::rankin_asymptotic(pi / 6, 10) == doctest::Approx(expected).epsilon(1e-10));

  // numerator vanishes as alpha approaches pi/4
  CHECK(b::rankin_asymptotic(pi / 4 - 1e-9, 10) < 1e-2);
  CHECK_THROWS_AS(b::rankin_asymptotic(pi / 4 + 1e-9, 10), std::invalid_argument);
  CHECK_THROWS_AS(b::rankin_asymptotic(-0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(b::rankin_asymptotic(0.5, 1), std::invalid_argument);

  // for fixed alpha < pi/4 with sqrt(2) sin(alpha) < 1 the value grows in d
  double prev = 0;
  for (unsigned d = 5; d <= 80; d += 5) {
    double v = b::rankin_asymptotic(pi / 6, d);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("jung radius") {
  CHECK(b::jung_radius(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(b::jung_radius(3) == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-15));
  CHECK(b::jung_radius_sq(3) == Rational(3, 8));
  double prev = 0;
  const double limit = 1 / std::sqrt(2.0);
  for (unsigned d = 1; d <= 500; ++d) {
    double r = b::jung_radius(d);
    CHECK(r > prev);
    CHECK(r < limit);
    prev = r;
  }
}

TEST_CASE("cap count bound reports both exponents") {
  auto cap = b::cap_count_bound(10, parse_decimal("0.5"));
  CHECK(cap.statement_form == doctest::Approx(102400.0).epsilon(1e-12));
  CHECK(cap.proof_form == doctest::Approx(51200.0).epsilon(1e-12));
  auto tiny = b::cap_count_bound(7, Rational(1, 1000000000));
  CHECK(tiny.statement_form == doctest::Approx(49.0).epsilon(1e-6));
  CHECK_THROWS_AS(b::cap_count_bound(10, Rational(1)), std::invalid_argument);
}

TEST_CASE("sine ratio margin") {
  const double pi = std::acos(-1.0);
  CHECK(b::sine_ratio_margin(Rational(1, 1000000)) == doctest::Approx(1.0).epsilon(1e-5));
  double expected = std::sin(pi / 3 - 0.04) / std::sin(pi / 3 + 0.02);
  CHECK(b::sine_ratio_margin(parse_decimal("0.02")) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(b::sine_ratio_margin(parse_decimal("0.02")) >= 1 - 1.744 * 0.02);

  for (const char* cv : {"0.001", "0.005", "0.01", "0.02", "0.023", "0.0239"})
    CHECK(b::sine_ratio_certified_lower(parse_decimal(cv)));
  CHECK_THROWS_AS(b::sine_ratio_margin(parse_decimal("0.024")), std::domain_error);
  CHECK_THROWS_AS(b::sine_ratio_margin(Rational(0)), std::domain_error);
}

TEST_CASE("per-dimension root") {
  CHECK(b::per_dimension_root(Rational(1024), 10) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b::per_dimension_root(Rational(6, 5), 1) == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("binomial growth regime consistency shrinks with n") {
  for (auto [x, y] : {std::pair{0.5, 0.2}, std::pair{0.6, 0.25}}) {
    double g100 = b::stirling_regime_gap(x, y, 100);
    double g1000 = b::stirling_regime_gap(x, y, 1000);
    double g10000 = b::stirling_regime_gap(x, y, 10000);
    CHECK(g1000 < g100);
    CHECK(g10000 < g1000);
    CHECK(g10000 < 0.01);
  }
}

TEST_CASE("certified power comparison") {
  Rational c05 = parse_decimal("0.5");
  // A(4,2,0.5) = 6/5; (1.04)^4 ≈ 1.17 < 6/5 < 1.41 ≈ (1.09)^4
  CHECK(b::guaranteed_edges_at_least_power(4, 2, c05, parse_decimal("1.04")));
  CHECK(!b::guaranteed_edges_at_least_power(4, 2, c05, parse_decimal("1.09")));
}

TEST_CASE("bound report invariants") {
  auto report = b::make_bound_report(30, parse_decimal("0.5"), std::nullopt, parse_decimal("0.005"));
  CHECK(report.k == 3);
  CHECK(report.A_exact > 0);
  CHECK(report.rho == doctest::Approx(0.009438).epsilon(1e-4));
  CHECK(Rational(report.A_floor) <= report.A_exact);
  CHECK(Rational(report.A_ceil) >= report.A_exact);
  CHECK(report.A_per_dim_root > 1.0);
  CHECK(!report.upper_env_hypothesis_ok);
}
