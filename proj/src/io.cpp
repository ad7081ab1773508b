#include "angleset/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace angleset::io {

namespace {

using nlohmann::json;

long line_of_byte(const std::string& text, std::size_t byte) {
  long line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Rational parse_coordinate_string(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_decimal(s.substr(0, slash));
    Rational den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in coordinate '" + s + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

std::string coordinate_to_string(const Rational& q) {
  return has_finite_decimal(q) ? format_decimal_exact(q) : format_fraction(q);
}

json meta_to_json(const PointSetMeta& meta) {
  json m = json::object();
  if (meta.k) m["k"] = *meta.k;
  if (meta.c) m["c"] = format_decimal_exact(*meta.c);
  if (meta.order) m["order"] = *meta.order;
  if (meta.seed) m["seed"] = *meta.seed;
  return m;
}

PointSetMeta meta_from_json(const json& j) {
  PointSetMeta meta;
  if (!j.is_object()) return meta;
  if (j.contains("k")) meta.k = j.at("k").get<std::uint32_t>();
  if (j.contains("c")) meta.c = parse_decimal(j.at("c").get<std::string>());
  if (j.contains("order")) meta.order = j.at("order").get<std::string>();
  if (j.contains("seed")) meta.seed = j.at("seed").get<std::uint64_t>();
  return meta;
}

std::string mode_name(Mode mode) { return mode == Mode::Strict ? "strict" : "weak"; }

}  // namespace

std::size_t PointSetFile::size() const {
  return is_lattice() ? lattice().size() : euclidean().size();
}
std::uint32_t PointSetFile::dimension() const {
  return is_lattice() ? lattice().dimension() : euclidean().dimension();
}

PointSetFile read_point_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_byte(text, e.byte));
  }

  try {
    if (!doc.is_object() || doc.value("format", "") != "angleset-v1")
      throw ParseError("missing or unknown format tag (want \"angleset-v1\")");
    std::uint32_t d = doc.at("d").get<std::uint32_t>();
    std::string coord_type = doc.at("coord_type").get<std::string>();
    const json& rows = doc.at("points");
    if (!rows.is_array()) throw ParseError("\"points\" must be an array");

    PointSetFile file;
    file.meta = meta_from_json(doc.value("meta", json::object()));

    if (coord_type == "int") {
      LatticePointSet points(d);
      std::vector<std::int64_t> row(d);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& r = rows[i];
        if (!r.is_array() || r.size() != d)
          throw ParseError("points[" + std::to_string(i) + "]: expected " + std::to_string(d) +
                           " coordinates");
        for (std::uint32_t m = 0; m < d; ++m) {
          if (!r[m].is_number_integer())
            throw ParseError("points[" + std::to_string(i) + "][" + std::to_string(m) +
                             "]: expected integer");
          row[m] = r[m].get<std::int64_t>();
        }
        points.add_point(std::span<const std::int64_t>(row));
      }
      file.points = std::move(points);
    } else if (coord_type == "decimal") {
      Rational scale_sq(1);
      const json& meta = doc.value("meta", json::object());
      if (meta.is_object() && meta.contains("scale_sq"))
        scale_sq = parse_coordinate_string(meta.at("scale_sq").get<std::string>());
      EuclideanPointSet points(d, scale_sq);
      std::vector<Rational> row(d);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& r = rows[i];
        if (!r.is_array() || r.size() != d)
          throw ParseError("points[" + std::to_string(i) + "]: expected " + std::to_string(d) +
                           " coordinates");
        for (std::uint32_t m = 0; m < d; ++m) {
          if (r[m].is_string())
            row[m] = parse_coordinate_string(r[m].get<std::string>());
          else if (r[m].is_number_integer())
            row[m] = Rational(r[m].get<long>());
          else
            throw ParseError("points[" + std::to_string(i) + "][" + std::to_string(m) +
                             "]: expected decimal string");
        }
        points.add_point(std::span<const Rational>(row));
      }
      file.points = std::move(points);
    } else {
      throw ParseError("unknown coord_type '" + coord_type + "'");
    }
    return file;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad point-set document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad point-set document: ") + e.what());
  }
}

void write_point_set(const std::string& path, const LatticePointSet& points,
                     const PointSetMeta& meta) {
  json doc;
  doc["format"] = "angleset-v1";
  doc["d"] = points.dimension();
  doc["coord_type"] = "int";
  json rows = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    json row = json::array();
    for (std::int32_t x : points.point(i)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  doc["points"] = std::move(rows);
  doc["meta"] = meta_to_json(meta);
  write_file_atomic(path, doc.dump(2) + "\n");
}

void write_point_set(const std::string& path, const EuclideanPointSet& points,
                     const PointSetMeta& meta) {
  json doc;
  doc["format"] = "angleset-v1";
  doc["d"] = points.dimension();
  doc["coord_type"] = "decimal";
  json rows = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    json row = json::array();
    for (const Rational& x : points.row(i)) row.push_back(coordinate_to_string(x));
    rows.push_back(std::move(row));
  }
  doc["points"] = std::move(rows);
  json m = meta_to_json(meta);
  if (points.scale_sq() != 1) m["scale_sq"] = coordinate_to_string(points.scale_sq());
  doc["meta"] = std::move(m);
  write_file_atomic(path, doc.dump(2) + "\n");
}

AngleSpec parse_alpha_spec(std::string_view text) {
  AngleSpec spec;
  if (text == "pi/3") {
    spec.kind = AngleSpec::Kind::PiThirdPlusC;
    spec.value = 0;
    return spec;
  }
  if (text == "pi/2") {  // convenience literal; exact right-angle threshold
    spec.kind = AngleSpec::Kind::Degrees;
    spec.value = 90;
    return spec;
  }
  if (text.starts_with("pi/3+")) {
    spec.kind = AngleSpec::Kind::PiThirdPlusC;
    spec.value = parse_decimal(text.substr(5));
    if (spec.value < 0) throw std::invalid_argument("alpha: c must be non-negative");
    return spec;
  }
  if (text.ends_with("rad")) {
    spec.kind = AngleSpec::Kind::Radians;
    spec.value = parse_decimal(text.substr(0, text.size() - 3));
    return spec;
  }
  if (text.ends_with("deg")) {
    spec.kind = AngleSpec::Kind::Degrees;
    spec.value = parse_decimal(text.substr(0, text.size() - 3));
    return spec;
  }
  throw std::invalid_argument("alpha spec '" + std::string(text) +
                              "': expected pi/3, pi/3+<decimal>, <decimal>rad or <decimal>deg");
}

std::string alpha_spec_to_string(const AngleSpec& spec) {
  switch (spec.kind) {
    case AngleSpec::Kind::PiThirdPlusC:
      return spec.value == 0 ? "pi/3" : "pi/3+" + format_decimal_exact(spec.value);
    case AngleSpec::Kind::Radians:
      return format_decimal_exact(spec.value) + "rad";
    case AngleSpec::Kind::Degrees:
      return format_decimal_exact(spec.value) + "deg";
  }
  return "";
}

nlohmann::json to_json(const verify::AngleCertificate& cert) {
  return json{{"n", cert.n},
              {"alpha_radians", cert.alpha_radians},
              {"mode", mode_name(cert.mode)},
              {"verdict", cert.pass ? "pass" : "fail"},
              {"max_angle", cert.max_angle},
              {"argmax_triple", cert.argmax_triple},
              {"borderline_count", cert.borderline_count},
              {"undecided_count", cert.undecided_count},
              {"violation_count", cert.violation_count}};
}

nlohmann::json to_json(const verify::DistanceStats& stats) {
  return json{{"min_sq", format_fraction(stats.min_sq)},
              {"max_sq", format_fraction(stats.max_sq)},
              {"argmin", stats.argmin},
              {"argmax", stats.argmax},
              {"ratio", stats.ratio}};
}

nlohmann::json to_json(const verify::RatioCheck& check) {
  return json{{"verdict", check.pass ? "pass" : "fail"},
              {"ratio", check.ratio},
              {"floor_value", check.floor_value},
              {"margin", check.margin}};
}

nlohmann::json to_json(const bounds::BoundReport& report) {
  return json{{"d", report.d},
              {"k", report.k},
              {"c", format_decimal_exact(report.c)},
              {"a_guess", format_fraction(report.a_guess)},
              {"rho", report.rho},
              {"delta", format_decimal_exact(report.delta)},
              {"A_exact", format_fraction(report.A_exact)},
              {"A_floor", report.A_floor.get_str()},
              {"A_ceil", report.A_ceil.get_str()},
              {"A_per_dim_root", report.A_per_dim_root},
              {"lower_envelope", report.lower_env},
              {"upper_envelope", report.upper_env},
              {"upper_envelope_hypothesis_ok", report.upper_env_hypothesis_ok}};
}

nlohmann::json to_json(const Ball& ball) {
  return json{{"center", ball.center}, {"radius", ball.radius}, {"support", ball.support}};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace angleset::io
