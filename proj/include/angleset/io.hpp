#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "angleset/bounds.hpp"
#include "angleset/points.hpp"
#include "angleset/threshold.hpp"
#include "angleset/verify.hpp"

namespace angleset::io {

/// File-format error with a 1-based line number when known (-1 otherwise).
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, long line_number = -1)
      : std::runtime_error(message), line(line_number) {}
  long line;
};

struct PointSetMeta {
  std::optional<std::uint32_t> k;
  std::optional<Rational> c;
  std::optional<std::string> order;
  std::optional<std::uint64_t> seed;
};

struct PointSetFile {
  std::variant<LatticePointSet, EuclideanPointSet> points{LatticePointSet(1)};
  PointSetMeta meta;

  bool is_lattice() const { return std::holds_alternative<LatticePointSet>(points); }
  const LatticePointSet& lattice() const { return std::get<LatticePointSet>(points); }
  const EuclideanPointSet& euclidean() const { return std::get<EuclideanPointSet>(points); }
  std::size_t size() const;
  std::uint32_t dimension() const;
};

/// angleset-v1 JSON: {"format":"angleset-v1","d":...,"coord_type":"int"|"decimal",
/// "points":[[...],...],"meta":{...}}. Integer coordinates are JSON integers;
/// decimal coordinates are exact decimal strings ("p/q" accepted for values
/// with no terminating decimal). Decimal sets may carry meta.scale_sq: the
/// represented points are sqrt(scale_sq) times the rows.
PointSetFile read_point_set(const std::string& path);
void write_point_set(const std::string& path, const LatticePointSet& points,
                     const PointSetMeta& meta = {});
void write_point_set(const std::string& path, const EuclideanPointSet& points,
                     const PointSetMeta& meta = {});

/// Threshold grammar: "pi/3", "pi/3+<decimal>", "<decimal>rad", "<decimal>deg".
AngleSpec parse_alpha_spec(std::string_view text);
std::string alpha_spec_to_string(const AngleSpec& spec);

nlohmann::json to_json(const verify::AngleCertificate& cert);
nlohmann::json to_json(const verify::DistanceStats& stats);
nlohmann::json to_json(const verify::RatioCheck& check);
nlohmann::json to_json(const bounds::BoundReport& report);
nlohmann::json to_json(const Ball& ball);

/// Write text to path atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace angleset::io
