#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "angleset/bounds.hpp"
#include "angleset/construct.hpp"
#include "angleset/io.hpp"
#include "angleset/oracle.hpp"
#include "angleset/verify.hpp"

namespace angleset::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct BudgetRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- construct ----

struct ConstructArgs {
  std::int64_t d = 0;
  std::string c;
  std::int64_t k = -1;
  std::string order = "colex";
  std::uint64_t seed = 0;
  std::uint64_t budget = 20'000'000;
  bool allow_partial = false;
  std::string delta = "0";
  std::string out_path;
  std::string report_path;
};

int run_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  if (args.d < 1) {
    err << "construct: dimension must be positive\n";
    return kExitUsage;
  }
  Rational c = parse_decimal(args.c);
  Rational delta = parse_decimal(args.delta);
  std::uint32_t d = static_cast<std::uint32_t>(args.d);

  construct::GreedyOptions options;
  options.candidate_budget = args.budget;
  options.seed = args.seed;
  if (args.order == "colex")
    options.order = construct::EnumerationOrder::Colex;
  else if (args.order == "random")
    options.order = construct::EnumerationOrder::SeededRandom;
  else
    throw CLI::ValidationError("--order", "expected colex or random");

  std::optional<std::uint32_t> forced_k;
  if (args.k >= 0) {
    if (args.k < 1 || args.k > args.d) {
      err << "construct: k must be in 1..d\n";
      return kExitUsage;
    }
    forced_k = static_cast<std::uint32_t>(args.k);
  }
  std::uint32_t k = forced_k ? *forced_k : bounds::choose_k(d, c);
  BigInt total = construct::candidate_count(d, k);
  if (total > BigInt(static_cast<unsigned long>(args.budget)) && !args.allow_partial)
    throw BudgetRefusal("C(d,k) = " + total.get_str() + " exceeds the enumeration budget " +
                        std::to_string(args.budget) + " (use --allow-partial to run anyway)");

  auto result = construct::construct_point_set(d, c, k, options, delta);
  const auto& report = result.report;

  io::PointSetMeta meta;
  meta.k = k;
  meta.c = c;
  meta.order = args.order;
  if (args.order == "random") meta.seed = args.seed;
  io::write_point_set(args.out_path, result.points, meta);
  if (!args.report_path.empty())
    io::write_file_atomic(args.report_path, io::to_json(report).dump(2) + "\n");

  out << "edges: " << result.hypergraph.edge_count() << "\n";
  out << "guaranteed_at_least: " << report.A_ceil.get_str() << " (A = "
      << format_fraction(report.A_exact) << ")\n";
  out << "full_enumeration: " << (result.hypergraph.full_enumeration() ? "yes" : "no") << "\n";
  out << "per_dim_root: " << report.A_per_dim_root << "\n";
  out << "lower_envelope: " << report.lower_env << "\n";
  out << "upper_envelope: " << report.upper_env;
  if (!report.upper_env_hypothesis_ok) out << "  # warning: hypothesis c in (0, 0.02) violated";
  out << "\n";
  out << "wrote: " << args.out_path << "\n";
  return kExitPass;
}

// ---- verify ----

struct VerifyArgs {
  std::string points_path;
  std::string alpha;
  bool strict = false;
  bool weak = false;
  std::string ratio_c;
  bool with_ball = false;
  std::string out_path;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  io::PointSetFile file = io::read_point_set(args.points_path);
  AngleSpec spec = io::parse_alpha_spec(args.alpha);
  AngleThreshold threshold(spec);
  Mode mode = args.weak ? Mode::Weak : Mode::Strict;
  if (file.size() < 3) {
    err << "verify: need at least 3 points\n";
    return kExitUsage;
  }

  verify::AngleCertificate cert;
  verify::DistanceStats stats;
  if (file.is_lattice()) {
    cert = verify::max_angle(file.lattice(), threshold, mode);
    stats = verify::distance_stats(file.lattice());
  } else {
    cert = verify::max_angle(file.euclidean(), threshold, mode);
    stats = verify::distance_stats(file.euclidean());
  }

  // The ratio consequence applies for c below 0.024: taken from --ratio-c,
  // else the alpha spec, else file metadata.
  std::optional<Rational> ratio_c;
  if (!args.ratio_c.empty())
    ratio_c = parse_decimal(args.ratio_c);
  else if (spec.kind == AngleSpec::Kind::PiThirdPlusC && spec.value > 0)
    ratio_c = spec.value;
  else if (file.meta.c)
    ratio_c = *file.meta.c;

  nlohmann::json doc;
  doc["certificate"] = io::to_json(cert);
  doc["distance_stats"] = io::to_json(stats);
  if (ratio_c && *ratio_c > 0 && *ratio_c < Rational(24, 1000)) {
    verify::RatioCheck rc = verify::check_min_max_ratio(stats, *ratio_c);
    doc["ratio_check"] = io::to_json(rc);
    doc["ratio_check"]["c"] = format_decimal_exact(*ratio_c);
  } else {
    doc["ratio_check"] = nullptr;  // consequence holds only on c in (0, 0.024)
  }
  if (args.with_ball && !file.is_lattice()) {
    Ball ball = smallest_enclosing_ball(file.euclidean());
    double diameter = std::sqrt(Rational(stats.max_sq).get_d());
    double jung_bound = bounds::jung_radius(file.dimension()) * diameter;
    doc["enclosing_ball"] = io::to_json(ball);
    doc["enclosing_ball"]["jung_bound"] = jung_bound;
    doc["enclosing_ball"]["jung_ok"] = ball.radius <= jung_bound + 1e-9;
  }

  std::string text = doc.dump(2) + "\n";
  out << text;
  if (!args.out_path.empty()) io::write_file_atomic(args.out_path, text);
  return cert.pass ? kExitPass : kExitVerifyFail;
}

// ---- bounds ----

struct BoundsArgs {
  std::string d_spec;
  std::string c_spec;
  std::string delta = "0";
  std::int64_t k = -1;
  bool full_scan = false;
  bool aux = false;
  std::string rankin_alpha;
  std::string cap_y;
  std::string out_path;
};

std::vector<std::uint32_t> parse_d_spec(const std::string& spec) {
  std::vector<std::uint32_t> out;
  if (spec.find(':') != std::string::npos) {
    unsigned long start = 0, stop = 0, step = 1;
    if (std::sscanf(spec.c_str(), "%lu:%lu:%lu", &start, &stop, &step) < 2 || step == 0 ||
        start == 0 || stop < start)
      throw std::invalid_argument("bad d range '" + spec + "' (want start:stop[:step])");
    for (unsigned long d = start; d <= stop; d += step) out.push_back(static_cast<std::uint32_t>(d));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    long v = std::stol(item);
    if (v < 1) throw std::invalid_argument("dimension must be positive");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty d list");
  return out;
}

std::vector<Rational> parse_c_list(const std::string& spec) {
  std::vector<Rational> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_decimal(item));
  }
  if (out.empty()) throw std::invalid_argument("empty c list");
  return out;
}

int run_bounds(const BoundsArgs& args, std::ostream& out, std::ostream&) {
  auto ds = parse_d_spec(args.d_spec);
  auto cs = parse_c_list(args.c_spec);
  Rational delta = parse_decimal(args.delta);
  std::optional<double> rankin_alpha;
  if (!args.rankin_alpha.empty()) {
    AngleThreshold thr{io::parse_alpha_spec(args.rankin_alpha)};
    rankin_alpha = thr.alpha_radians();
  }
  std::optional<Rational> cap_y;
  if (!args.cap_y.empty()) cap_y = parse_decimal(args.cap_y);

  std::ostringstream csv;
  csv << "# d,c,k,A_floor,A_ceil,A_per_dim_root,lower_envelope,upper_envelope";
  if (args.aux) {
    csv << ",jung_radius";
    if (rankin_alpha) csv << ",rankin";
    if (cap_y) csv << ",cap_statement,cap_proof";
  }
  csv << "\n";
  csv.precision(17);
  for (std::uint32_t d : ds)
    for (const Rational& c : cs) {
      std::uint32_t k = args.k >= 1 ? static_cast<std::uint32_t>(args.k)
                                    : bounds::choose_k(d, c, {.window = 0, .full_scan = args.full_scan});
      if (k > d) throw std::invalid_argument("forced k exceeds d");
      bounds::BoundReport r = bounds::make_bound_report(d, c, k, delta);
      csv << d << ',' << format_decimal_exact(c) << ',' << k << ',' << r.A_floor.get_str() << ','
          << r.A_ceil.get_str() << ',' << r.A_per_dim_root << ',' << r.lower_env << ','
          << r.upper_env;
      if (args.aux) {
        csv << ',' << bounds::jung_radius(d);
        if (rankin_alpha) csv << ',' << bounds::rankin_asymptotic(*rankin_alpha, d);
        if (cap_y) {
          auto cap = bounds::cap_count_bound(d, *cap_y);
          csv << ',' << cap.statement_form << ',' << cap.proof_form;
        }
      }
      csv << "\n";
    }

  if (!args.out_path.empty())
    io::write_file_atomic(args.out_path, csv.str());
  else
    out << csv.str();
  return kExitPass;
}

// ---- oracle ----

struct OracleArgs {
  std::string candidates;
  std::string alpha;
  bool strict = false;
  bool weak = false;
  std::string method = "bnb";
  std::string out_path;
};

LatticePointSet cube_points(std::uint32_t d) {
  if (d == 0 || d > 20) throw std::invalid_argument("cube dimension must be in 1..20");
  LatticePointSet points(d);
  std::vector<std::int64_t> row(d);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
    for (std::uint32_t m = 0; m < d; ++m) row[m] = (v >> m) & 1;
    points.add_point(std::span<const std::int64_t>(row));
  }
  return points;
}

LatticePointSet weight_points(std::uint32_t k, std::uint32_t d) {
  if (d == 0 || k == 0 || k > d) throw std::invalid_argument("weight spec needs 1 <= k <= d");
  LatticePointSet points(d);
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    KSubset s(d, idx);
    auto v = s.characteristic_vector();
    points.add_point(std::span<const std::int32_t>(v));
    // next colex k-subset
    std::uint32_t i = 0;
    for (; i < k; ++i) {
      std::uint32_t ceiling = (i + 1 < k) ? idx[i + 1] : d + 1;
      if (idx[i] + 1 < ceiling) {
        ++idx[i];
        for (std::uint32_t j = 0; j < i; ++j) idx[j] = j + 1;
        break;
      }
    }
    if (i == k) break;
  }
  return points;
}

int run_oracle(const OracleArgs& args, std::ostream& out, std::ostream&) {
  AngleThreshold threshold{io::parse_alpha_spec(args.alpha)};
  Mode mode = args.weak ? Mode::Weak : Mode::Strict;
  oracle::SubsetMethod method;
  if (args.method == "bnb")
    method = oracle::SubsetMethod::BranchAndBound;
  else if (args.method == "naive")
    method = oracle::SubsetMethod::Naive;
  else if (args.method == "both")
    method = oracle::SubsetMethod::Both;
  else
    throw CLI::ValidationError("--method", "expected bnb, naive or both");

  std::variant<LatticePointSet, EuclideanPointSet> candidates{LatticePointSet(1)};
  if (args.candidates.starts_with("cube:")) {
    candidates = cube_points(static_cast<std::uint32_t>(std::stoul(args.candidates.substr(5))));
  } else if (args.candidates.starts_with("simplex:")) {
    candidates = oracle::regular_simplex(static_cast<std::uint32_t>(std::stoul(args.candidates.substr(8))));
  } else if (args.candidates.starts_with("weight:")) {
    std::string rest = args.candidates.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("weight spec must be weight:k:d");
    std::uint32_t k = static_cast<std::uint32_t>(std::stoul(rest.substr(0, colon)));
    std::uint32_t d = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1)));
    candidates = weight_points(k, d);
  } else {
    io::PointSetFile file = io::read_point_set(args.candidates);
    candidates = std::move(file.points);
  }

  oracle::MaxSubsetResult result;
  try {
    if (std::holds_alternative<LatticePointSet>(candidates))
      result = oracle::brute_force_max_subset(std::get<LatticePointSet>(candidates), threshold,
                                              mode, method);
    else
      result = oracle::brute_force_max_subset(std::get<EuclideanPointSet>(candidates), threshold,
                                              mode, method);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("budget") != std::string::npos) throw BudgetRefusal(e.what());
    throw;
  }

  out << "size: " << result.size << "\n";
  out << "subset:";
  for (std::size_t idx : result.subset) out << ' ' << idx;
  out << "\n";
  out << "conflict_triples: " << result.conflict_triple_count << "\n";
  if (method == oracle::SubsetMethod::Both)
    out << "methods_agree: " << (result.methods_agree ? "yes" : "no") << "\n";

  if (!args.out_path.empty()) {
    // Witness subset written as a point-set file of the same flavor.
    if (std::holds_alternative<LatticePointSet>(candidates)) {
      const auto& src = std::get<LatticePointSet>(candidates);
      LatticePointSet subset(src.dimension());
      for (std::size_t idx : result.subset) subset.add_point(src.point(idx));
      io::write_point_set(args.out_path, subset);
    } else {
      const auto& src = std::get<EuclideanPointSet>(candidates);
      EuclideanPointSet subset(src.dimension(), src.scale_sq(), src.precision_bits());
      for (std::size_t idx : result.subset) subset.add_point(src.row(idx));
      io::write_point_set(args.out_path, subset);
    }
    out << "wrote: " << args.out_path << "\n";
  }
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"construct, certify and bound angle-constrained point sets"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  CLI::App* c = app.add_subcommand("construct", "greedy hypergraph + hypercube embedding");
  c->add_option("-d,--dimension", cargs.d, "ambient dimension")->required();
  c->add_option("-c,--slack", cargs.c, "angle slack (decimal, 0<c<1)")->required();
  c->add_option("-k,--edge-size", cargs.k, "force the edge size instead of choose_k");
  c->add_option("--order", cargs.order, "candidate order: colex|random")->capture_default_str();
  c->add_option("--seed", cargs.seed, "seed for --order random")->capture_default_str();
  c->add_option("--budget", cargs.budget, "candidate enumeration budget")->capture_default_str();
  c->add_flag("--allow-partial", cargs.allow_partial, "run truncated scans instead of refusing");
  c->add_option("--delta", cargs.delta, "slack for the lower envelope")->capture_default_str();
  c->add_option("-o,--out", cargs.out_path, "point-set output file")->required();
  c->add_option("--report", cargs.report_path, "bound report output file");

  VerifyArgs vargs;
  CLI::App* v = app.add_subcommand("verify", "certify a point-set file");
  v->add_option("points", vargs.points_path, "point-set file")->required();
  v->add_option("--alpha", vargs.alpha, "threshold: pi/3, pi/3+<dec>, <dec>rad, <dec>deg")->required();
  auto* vs = v->add_flag("--strict", vargs.strict, "strict mode: angles must be < alpha (default)");
  v->add_flag("--weak", vargs.weak, "weak mode: angles must be <= alpha")->excludes(vs);
  v->add_option("--ratio-c", vargs.ratio_c, "run the min/max ratio check for this c");
  v->add_flag("--ball", vargs.with_ball, "also report the smallest enclosing ball (decimal sets)");
  v->add_option("-o,--out", vargs.out_path, "write the JSON report here too");

  BoundsArgs bargs;
  CLI::App* b = app.add_subcommand("bounds", "CSV table of bound evaluations");
  b->add_option("--d", bargs.d_spec, "dimensions: list 12,16 or range start:stop[:step]")->required();
  b->add_option("--c", bargs.c_spec, "slack values: comma-separated decimals")->required();
  b->add_option("--delta", bargs.delta, "slack for the lower envelope")->capture_default_str();
  b->add_option("--k", bargs.k, "force the edge size for every row");
  b->add_flag("--full-scan", bargs.full_scan, "choose k by scanning all k = 1..d");
  b->add_flag("--aux", bargs.aux, "append auxiliary columns (jung, rankin, cap)");
  b->add_option("--rankin-alpha", bargs.rankin_alpha, "alpha spec for the rankin column");
  b->add_option("--cap-y", bargs.cap_y, "y for the cap-count columns");
  b->add_option("-o,--out", bargs.out_path, "write CSV here instead of stdout");

  OracleArgs oargs;
  CLI::App* o = app.add_subcommand("oracle", "maximum angle-feasible subset (exact, small inputs)");
  o->add_option("candidates", oargs.candidates, "file path or cube:d | simplex:d | weight:k:d")->required();
  o->add_option("--alpha", oargs.alpha, "threshold spec")->required();
  auto* os = o->add_flag("--strict", oargs.strict, "strict mode (default)");
  o->add_flag("--weak", oargs.weak, "weak mode")->excludes(os);
  o->add_option("--method", oargs.method, "bnb|naive|both")->capture_default_str();
  o->add_option("-o,--out", oargs.out_path, "write the witness subset here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return run_construct(cargs, out, err);
    if (v->parsed()) return run_verify(vargs, out, err);
    if (b->parsed()) return run_bounds(bargs, out, err);
    if (o->parsed()) return run_oracle(oargs, out, err);
  } catch (const BudgetRefusal& e) {
    err << "budget refusal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const io::ParseError& e) {
    err << "parse error";
    if (e.line >= 0) err << " (line " << e.line << ")";
    err << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace angleset::cli
