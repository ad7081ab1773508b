// Acceptance suite: one line per criterion, exit code = number of failures.
// An optional argument restricts the run to a single criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "angleset/bounds.hpp"
#include "angleset/construct.hpp"
#include "angleset/io.hpp"
#include "angleset/miniball.hpp"
#include "angleset/oracle.hpp"
#include "angleset/threshold.hpp"
#include "angleset/verify.hpp"
#include "cli/commands.hpp"

using namespace angleset;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

AngleThreshold pi3_plus(const Rational& c) {
  return AngleThreshold(AngleSpec{AngleSpec::Kind::PiThirdPlusC, c});
}

const std::vector<std::uint32_t> kGridD = {12, 16, 20, 24, 30};
const std::vector<const char*> kGridC = {"0.1", "0.2", "0.3", "0.5"};

struct GridEntry {
  std::uint32_t d;
  Rational c;
  std::uint32_t k;
  construct::ConstructionResult result;
};

std::vector<GridEntry>& grid_runs() {
  static std::vector<GridEntry> runs = [] {
    std::vector<GridEntry> out;
    for (std::uint32_t d : kGridD)
      for (const char* cv : kGridC) {
        Rational c = parse_decimal(cv);
        std::uint32_t k = bounds::choose_k(d, c);
        out.push_back({d, c, k, construct::construct_point_set(d, c, k)});
      }
    return out;
  }();
  return runs;
}

// --- criterion 1: full-enumeration greedy meets the exact guarantee ---
void criterion_1(Check& chk) {
  for (const auto& entry : grid_runs()) {
    BigInt candidates = construct::candidate_count(entry.d, entry.k);
    chk.require(candidates <= 2000000,
                "candidate count exceeds 2e6 at d=" + std::to_string(entry.d));
    chk.require(entry.result.hypergraph.full_enumeration(),
                "scan not complete at d=" + std::to_string(entry.d));
    BigInt edges(static_cast<unsigned long>(entry.result.hypergraph.edge_count()));
    chk.require(edges >= entry.result.report.A_ceil,
                "edge count below ceil(A) at d=" + std::to_string(entry.d) + ", c=" +
                    format_decimal_exact(entry.c) + ", k=" + std::to_string(entry.k));
    chk.require(entry.result.hypergraph.recheck_invariants(),
                "pairwise intersection invariant failed at d=" + std::to_string(entry.d));
  }
}

// --- criterion 2: every constructed set certifies at alpha = pi/3 + c,
// driven through the actual verify command on the actual output file ---
void criterion_2(Check& chk) {
  auto verify_via_cli = [&](const LatticePointSet& points, const Rational& c,
                            const std::string& where) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("angleset_acc2_" + std::to_string(points.size()) +
                                                   "_" + format_decimal_exact(c) + ".json"))
            .string();
    io::PointSetMeta meta;
    meta.c = c;
    io::write_point_set(path, points, meta);
    std::string alpha = "pi/3+" + format_decimal_exact(c);
    std::vector<const char*> argv = {"angleset", "verify", path.c_str(), "--alpha", alpha.c_str(),
                                     "--strict"};
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    chk.require(code == 0, "verify command exited " + std::to_string(code) + where);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(out.str());
    } catch (...) {
      chk.require(false, "verify command emitted unparsable output" + where);
      std::filesystem::remove(path);
      return;
    }
    chk.require(doc["certificate"]["undecided_count"].get<std::size_t>() == 0,
                "undecided borderline triples" + where);
    if (c > 0 && c < Rational(24, 1000)) {
      chk.require(!doc["ratio_check"].is_null() && doc["ratio_check"]["verdict"] == "pass",
                  "min/max ratio consequence failed" + where);
    }
    std::filesystem::remove(path);
  };

  for (const auto& entry : grid_runs()) {
    std::string where = " at d=" + std::to_string(entry.d) + ", c=" + format_decimal_exact(entry.c);
    verify_via_cli(entry.result.points, entry.c, where);
  }
  // the grid has no c below 0.024; exercise the ratio consequence on one
  // small-slack construction as well
  Rational small_c = parse_decimal("0.02");
  auto small = construct::construct_point_set(30, small_c);
  verify_via_cli(small.points, small_c, " at d=30, c=0.02");
}

// --- criterion 3: pinned growth regression at c = 0.2 ---
void criterion_3(Check& chk) {
  const Rational c = parse_decimal("0.2");
  // 1 + (0.0094 - 0.005) * 0.2
  const Rational threshold = 1 + (parse_decimal("0.0094") - parse_decimal("0.005")) * c;

  // Pinned by a module scan over d <= 1000 (development-time run of the loop
  // below): the exact comparison A(d, choose_k(d, c), c) >= threshold^d first
  // holds at d = 2, where choose_k picks k = 1 and A = d = 2.
  const std::uint32_t pinned_d = 2;
  const Rational pinned_A(2);

  std::uint32_t found = 0;
  for (std::uint32_t d = 1; d <= 1000 && found == 0; ++d) {
    std::uint32_t k = bounds::choose_k(d, c);
    if (bounds::guaranteed_edges_at_least_power(d, k, c, threshold)) found = d;
  }
  chk.require(found == pinned_d,
              "smallest qualifying d changed: expected " + std::to_string(pinned_d) + ", got " +
                  std::to_string(found));
  chk.require(bounds::guaranteed_edges(pinned_d, bounds::choose_k(pinned_d, c), c) == pinned_A,
              "pinned A value changed");

  double rho = bounds::rho_constant();
  chk.require(std::abs(rho - 0.009438) < 1e-5, "rate constant drifted from 0.009438");
  double g = bounds::entropy_growth_ratio(Rational(1, 10000));
  std::ostringstream msg;
  msg.precision(6);
  msg << "(e^{H(c/5,c)}-1)/c at c=1e-4 is " << std::scientific << g
      << ", not within 1e-3 of 0.009438: the ratio vanishes linearly (slope (log5-4/5)/5 = 0.16189) "
         "and only reaches 0.009438 near c=0.058, so this reproduction target cannot hold";
  chk.require(std::abs(g - rho) / rho < 1e-3, msg.str());
}

// --- criterion 4: H-function properties ---
void criterion_4(Check& chk) {
  std::mt19937_64 rng(20240);
  for (int t = 0; t < 100; ++t) {
    Rational a(1 + static_cast<long>(rng() % 2999), 10000);  // (0, 0.3)
    chk.require(std::abs(bounds::entropy_H_db(a, a)) < 1e-12, "dH/db(a,a) not ~0");
  }
  Rational h(1, 1000000);
  for (int t = 0; t < 1000; ++t) {
    Rational a(1 + static_cast<long>(rng() % 449), 1000);   // (0, 0.45)
    Rational b(2 + static_cast<long>(rng() % 996), 1000);   // interior of (0,1)
    double fd = (bounds::entropy_H(a, b + h) - bounds::entropy_H(a, b - h)) / (2 * h.get_d());
    double an = bounds::entropy_H_db(a, b);
    chk.require(std::abs(fd - an) <= 1e-6 * std::max(1e-12, std::abs(an)),
                "finite-difference mismatch at a=" + format_fraction(a) + ", b=" + format_fraction(b));
  }
  double prev = -1e300;
  for (int i = 0; i < 50; ++i) {
    Rational c = Rational(2, 10000) + Rational(8996, 10000) * i / 49;  // inside (1e-4, 0.9)
    c.canonicalize();
    double g = bounds::entropy_growth_ratio(c);
    chk.require(g > prev, "growth ratio not strictly increasing at grid point " + std::to_string(i));
    prev = g;
  }
}

// --- criterion 5: the regular simplex pins the strict/weak distinction ---
void criterion_5(Check& chk) {
  for (std::uint32_t d = 1; d <= 50; ++d) {
    auto simplex = oracle::regular_simplex(d);
    for (std::size_t i = 0; i < simplex.size(); ++i)
      for (std::size_t j = i + 1; j < simplex.size(); ++j)
        chk.require(simplex.squared_distance(i, j) == 1,
                    "pairwise distance not 1 at d=" + std::to_string(d));
    if (d >= 2) {
      auto weak = verify::max_angle(simplex, pi3_plus(Rational(0)), Mode::Weak);
      auto strict = verify::max_angle(simplex, pi3_plus(Rational(0)), Mode::Strict);
      chk.require(weak.pass, "weak verification failed at d=" + std::to_string(d));
      chk.require(!strict.pass, "strict verification passed at d=" + std::to_string(d));
      chk.require(weak.undecided_count == 0, "undecided triples at d=" + std::to_string(d));
    }
    auto rank = oracle::equidistant_rank_check(simplex, 0);
    chk.require(rank.precondition_ok && rank.rank == d,
                "rank check failed at d=" + std::to_string(d));
  }
}

// --- criterion 6: enclosing balls meet the dimension bound, tight on simplexes ---
void criterion_6(Check& chk) {
  for (std::uint32_t d = 2; d <= 30; ++d) {
    Ball ball = smallest_enclosing_ball(oracle::regular_simplex(d));
    double expected = bounds::jung_radius(d);
    chk.require(std::abs(ball.radius - expected) <= 1e-9,
                "simplex ball radius off at d=" + std::to_string(d) + " (got " +
                    std::to_string(ball.radius) + ", want " + std::to_string(expected) + ")");
  }
  std::mt19937_64 rng(20241);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 8;
    std::size_t n = 2 + rng() % 30;
    std::vector<double> flat(n * d);
    for (auto& x : flat) x = coord(rng);
    Ball ball = smallest_enclosing_ball(flat, n, d);
    double diameter = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double s = 0;
        for (std::size_t m = 0; m < d; ++m) {
          double delta = flat[i * d + m] - flat[j * d + m];
          s += delta * delta;
        }
        diameter = std::max(diameter, std::sqrt(s));
      }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t m = 0; m < d; ++m) {
        double delta = flat[i * d + m] - ball.center[m];
        s += delta * delta;
      }
      chk.require(std::sqrt(s) <= ball.radius + 1e-9, "point escapes its enclosing ball");
    }
    chk.require(ball.radius <= bounds::jung_radius(static_cast<std::uint32_t>(d)) * diameter + 1e-9,
                "ball radius exceeds the dimension bound");
  }
}

// --- criterion 7: brute-force methods agree ---
void criterion_7(Check& chk) {
  std::mt19937_64 rng(20242);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t d = 2 + rng() % 3;
    std::size_t n = 6 + rng() % 13;  // up to 18
    LatticePointSet pts(d);
    std::vector<std::vector<std::int64_t>> rows;
    while (rows.size() < n) {
      std::vector<std::int64_t> r(d);
      for (auto& x : r) x = static_cast<std::int64_t>(rng() % 7) - 3;
      if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
        rows.push_back(r);
        pts.add_point(std::span<const std::int64_t>(r));
      }
    }
    AngleSpec spec;
    if (trial % 2 == 0) {
      spec.kind = AngleSpec::Kind::Degrees;
      spec.value = 40 + static_cast<long>(rng() % 131);
    } else {
      spec.kind = AngleSpec::Kind::Radians;
      spec.value = Rational(70 + static_cast<long>(rng() % 230), 100);
    }
    Mode mode = (rng() & 1) ? Mode::Strict : Mode::Weak;
    auto result = oracle::brute_force_max_subset(pts, AngleThreshold(spec), mode,
                                                 oracle::SubsetMethod::Both);
    chk.require(result.methods_agree, "bnb and naive disagree at trial " + std::to_string(trial));
  }

  LatticePointSet cube(3);
  std::vector<std::int64_t> row(3);
  for (std::uint64_t v = 0; v < 8; ++v) {
    for (std::uint32_t m = 0; m < 3; ++m) row[m] = (v >> m) & 1;
    cube.add_point(std::span<const std::int64_t>(row));
  }
  auto result = oracle::brute_force_max_subset(
      cube, AngleThreshold(AngleSpec{AngleSpec::Kind::Degrees, Rational(70)}), Mode::Strict,
      oracle::SubsetMethod::Both);
  chk.require(result.size == 4 && result.methods_agree, "cube:3 at 70 degrees is not 4");
}

// --- criterion 8: closed-form evaluations against independent routes ---
void criterion_8(Check& chk) {
  const long double pi_l = std::acos(-1.0L);

  for (double alpha : {0.5235987755982988 /* pi/6 */, 0.6283185307179586 /* pi/5 */, 0.5, 0.7})
    for (std::uint32_t d : {5u, 10u, 20u, 50u}) {
      double got = bounds::rankin_asymptotic(alpha, d);
      long double a = alpha;
      long double log_num = 0.5L * (std::log(pi_l / 2) + 3 * std::log((long double)d) +
                                    std::log(std::cos(2 * a)));
      long double log_den = (d - 1) * (0.5L * std::log(2.0L) + std::log(std::sin(a)));
      long double expected = std::exp(log_num - log_den);
      chk.require(std::abs(got - (double)expected) <= 1e-10 * std::abs((double)expected),
                  "rankin mismatch at alpha=" + std::to_string(alpha) + ", d=" + std::to_string(d));
    }

  for (std::uint32_t d : {5u, 10u, 20u})
    for (const char* yv : {"0.1", "0.5", "0.9"}) {
      Rational y = parse_decimal(yv);
      auto cap = bounds::cap_count_bound(d, y);
      // independent exact route for the statement form
      Rational base = 1 - y;
      Rational power(1);
      for (std::uint32_t i = 0; i < d; ++i) power *= base;
      Rational statement_exact = Rational(static_cast<unsigned long>(d) * d) / power;
      statement_exact.canonicalize();
      double expected_statement = statement_exact.get_d();
      Rational proof_exact = statement_exact * base;
      proof_exact.canonicalize();
      chk.require(std::abs(cap.statement_form - expected_statement) <=
                      1e-10 * expected_statement,
                  "cap statement form mismatch");
      chk.require(std::abs(cap.proof_form - proof_exact.get_d()) <= 1e-10 * proof_exact.get_d(),
                  "cap proof form mismatch");
    }

  for (int i = 0; i < 100; ++i) {
    Rational c = Rational(24, 1000) * (2 * i + 1) / 200;  // inside (0, 0.024)
    c.canonicalize();
    double got = bounds::sine_ratio_margin(c);
    long double cd = (long double)c.get_d();
    long double expected = std::sin(pi_l / 3 - 2 * cd) / std::sin(pi_l / 3 + cd);
    chk.require(std::abs(got - (double)expected) <= 1e-10, "sine ratio mismatch");
    chk.require(bounds::sine_ratio_certified_lower(c),
                "sine ratio fell below 1 - 1.744c at c=" + format_fraction(c));
  }
}

// --- criterion 9: expansion properties ---
void criterion_9(Check& chk) {
  auto lemma = oracle::isosceles_lemma_check(1000000, 20243);
  chk.require(lemma.counterexamples == 0,
              "isosceles lemma counterexample found (" +
                  std::to_string(lemma.counterexamples) + " of " +
                  std::to_string(lemma.valid_samples) + " valid samples)");
  chk.require(lemma.valid_samples > 0, "isosceles sampler produced no valid samples");

  std::mt19937_64 rng(20244);
  std::uniform_real_distribution<double> radial(0.78, 0.98);
  std::uniform_real_distribution<double> jitter(-0.01, 0.01);
  int accepted = 0;
  for (int trial = 0; accepted < 100 && trial < 1000; ++trial) {
    std::uint32_t d = 3 + rng() % 6;
    const double radius = 1.0;

    // near-boundary, well-separated configuration: vertices of a centered
    // regular simplex scaled onto the sphere of radius u, plus a little jitter
    auto simplex = oracle::regular_simplex_intrinsic(d - 1);  // d points in R^{d-1}
    std::size_t n = 3 + rng() % (simplex.size() - 2);         // 3..d of them
    std::vector<std::vector<double>> pts;
    std::vector<double> centroid(d - 1, 0.0);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      auto p = simplex.point_double(i);
      for (std::size_t m = 0; m + 1 < d; ++m) centroid[m] += p[m] / simplex.size();
    }
    double u = radial(rng);
    for (std::size_t i = 0; i < n; ++i) {
      auto p = simplex.point_double(i);
      std::vector<double> q(d, 0.0);
      double norm = 0;
      for (std::size_t m = 0; m + 1 < d; ++m) {
        q[m] = p[m] - centroid[m] + jitter(rng) * 0.05;
        norm += q[m] * q[m];
      }
      norm = std::sqrt(norm);
      double target = u * radius;
      for (std::size_t m = 0; m < d; ++m) q[m] = q[m] / norm * target;
      pts.push_back(std::move(q));
    }
    bool hypothesis = true;
    for (std::size_t i = 0; i < n && hypothesis; ++i)
      for (std::size_t j = i + 1; j < n && hypothesis; ++j) {
        double s = 0;
        for (std::size_t m = 0; m < d; ++m) {
          double delta = pts[i][m] - pts[j][m];
          s += delta * delta;
        }
        if (std::sqrt(s) <= radius * 1.0001) hypothesis = false;
      }
    if (!hypothesis) continue;
    ++accepted;

    EuclideanPointSet set(d);
    for (const auto& p : pts) set.add_point(std::span<const double>(p));
    Ball ball{std::vector<double>(d, 0.0), radius, {}};
    auto projected = verify::project_to_sphere(set, ball);
    chk.require(projected.pairs_above_radius == n * (n - 1) / 2,
                "hypothesis pair count mismatch");
    chk.require(projected.expansion_holds, "projection failed to expand a pair");
  }
  chk.require(accepted == 100, "could not build 100 qualifying configurations");
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "construction guarantee on the (d, c) grid", criterion_1},
      {2, "end-to-end strict certification at pi/3 + c", criterion_2},
      {3, "pinned growth regression and rate constant at c = 0.2", criterion_3},
      {4, "H-function stationary point, derivative, monotone growth ratio", criterion_4},
      {5, "regular simplex distances, weak/strict split, rank certificate", criterion_5},
      {6, "enclosing-ball tightness and dimension bound", criterion_6},
      {7, "branch-and-bound agrees with exhaustive search", criterion_7},
      {8, "closed-form evaluations vs independent routes", criterion_8},
      {9, "triangle-expansion properties", criterion_9},
  };

  int only = 0;  // 0 = all criteria
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0], criteria.size());
      return 64;
    }
  }

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    Check chk;
    try {
      criterion.run(chk);
    } catch (const std::exception& e) {
      chk.ok = false;
      chk.detail = std::string("exception: ") + e.what();
    }
    if (chk.ok) {
      std::printf("PASS criterion %d: %s\n", criterion.id, criterion.name);
    } else {
      std::printf("FAIL criterion %d: %s — %s\n", criterion.id, criterion.name,
                  chk.detail.c_str());
      ++failures;
    }
  }
  if (only == 0) {
    if (failures == 0)
      std::printf("all %zu criteria passed\n", criteria.size());
    else
      std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
