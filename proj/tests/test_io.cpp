#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "angleset/io.hpp"
#include "angleset/oracle.hpp"

using namespace angleset;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) {}
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
  std::string str() const { return path.string(); }
};

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("alpha spec grammar") {
  auto a = io::parse_alpha_spec("pi/3");
  CHECK(a.kind == AngleSpec::Kind::PiThirdPlusC);
  CHECK(a.value == 0);

  auto b = io::parse_alpha_spec("pi/3+0.01");
  CHECK(b.kind == AngleSpec::Kind::PiThirdPlusC);
  CHECK(b.value == Rational(1, 100));

  auto c = io::parse_alpha_spec("0.5rad");
  CHECK(c.kind == AngleSpec::Kind::Radians);
  CHECK(c.value == Rational(1, 2));

  auto d = io::parse_alpha_spec("70deg");
  CHECK(d.kind == AngleSpec::Kind::Degrees);
  CHECK(d.value == 70);

  CHECK_THROWS_AS(io::parse_alpha_spec("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_alpha_spec("pi/3+-1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_alpha_spec("deg"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_alpha_spec(""), std::invalid_argument);

  CHECK(io::alpha_spec_to_string(b) == "pi/3+0.01");
  CHECK(io::alpha_spec_to_string(io::parse_alpha_spec("pi/3")) == "pi/3");
  CHECK(io::alpha_spec_to_string(d) == "70deg");
}

TEST_CASE("lattice point-set files round-trip with metadata") {
  TempFile file("angleset_io_lattice.json");
  LatticePointSet pts(3);
  for (auto row : {std::vector<std::int64_t>{0, 0, 0}, {1, 1, 0}, {1, 0, 1}})
    pts.add_point(std::span<const std::int64_t>(row));
  io::PointSetMeta meta;
  meta.k = 2;
  meta.c = parse_decimal("0.3");
  meta.order = "colex";
  io::write_point_set(file.str(), pts, meta);

  auto loaded = io::read_point_set(file.str());
  REQUIRE(loaded.is_lattice());
  CHECK(loaded.lattice() == pts);
  CHECK(loaded.meta.k == 2u);
  CHECK(*loaded.meta.c == Rational(3, 10));
  CHECK(*loaded.meta.order == "colex");
  CHECK(!loaded.meta.seed.has_value());
}

TEST_CASE("decimal point-set files preserve exact values and the scale") {
  TempFile file("angleset_io_simplex.json");
  auto simplex = oracle::regular_simplex(4);
  io::write_point_set(file.str(), simplex);
  auto loaded = io::read_point_set(file.str());
  REQUIRE(!loaded.is_lattice());
  CHECK(loaded.euclidean() == simplex);
  CHECK(loaded.euclidean().scale_sq() == Rational(1, 2));
  CHECK(loaded.euclidean().squared_distance(0, 1) == 1);
}

TEST_CASE("fraction coordinates are accepted") {
  TempFile file("angleset_io_fraction.json");
  write_text(file.path, R"({
    "format": "angleset-v1", "d": 2, "coord_type": "decimal",
    "points": [["1/3", "0.5"], ["0", 1]],
    "meta": {}
  })");
  auto loaded = io::read_point_set(file.str());
  CHECK(loaded.euclidean().row(0)[0] == Rational(1, 3));
  CHECK(loaded.euclidean().row(0)[1] == Rational(1, 2));
  CHECK(loaded.euclidean().row(1)[1] == 1);
}

TEST_CASE("malformed files raise ParseError with a line number") {
  TempFile file("angleset_io_bad.json");
  write_text(file.path, "{\n  \"format\": \"angleset-v1\",\n  \"d\": oops\n}\n");
  try {
    io::read_point_set(file.str());
    FAIL("expected ParseError");
  } catch (const io::ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("semantic file errors") {
  TempFile file("angleset_io_semantic.json");

  write_text(file.path, R"({"format": "other", "d": 2, "coord_type": "int", "points": []})");
  CHECK_THROWS_AS(io::read_point_set(file.str()), io::ParseError);

  write_text(file.path, R"({"format": "angleset-v1", "d": 2, "coord_type": "float", "points": []})");
  CHECK_THROWS_AS(io::read_point_set(file.str()), io::ParseError);

  write_text(file.path,
             R"({"format": "angleset-v1", "d": 2, "coord_type": "int", "points": [[1]]})");
  CHECK_THROWS_AS(io::read_point_set(file.str()), io::ParseError);

  write_text(file.path,
             R"({"format": "angleset-v1", "d": 2, "coord_type": "int", "points": [[1, 2.5]]})");
  CHECK_THROWS_AS(io::read_point_set(file.str()), io::ParseError);

  write_text(file.path,
             R"({"format": "angleset-v1", "d": 1, "coord_type": "int", "points": [[4194304]]})");
  CHECK_THROWS_AS(io::read_point_set(file.str()), io::ParseError);  // beyond the coordinate budget

  CHECK_THROWS_AS(io::read_point_set("/nonexistent/path.json"), io::ParseError);
}

TEST_CASE("atomic writes leave no temp file behind") {
  TempFile file("angleset_io_atomic.json");
  io::write_file_atomic(file.str(), "hello\n");
  CHECK(fs::exists(file.path));
  CHECK(!fs::exists(file.path.string() + ".tmp"));
  std::ifstream in(file.path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "hello");
}
