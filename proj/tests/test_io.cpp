#include <doctest.h>

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ifsg/enumerate.hpp"
#include "ifsg/io.hpp"
#include "ifsg/points.hpp"

using namespace ifsg;

TEST_CASE("semigroup text round-trips through parse and serialize") {
  CHECK(parse_semigroup("1\n0\n").order() == 1);
  CHECK(serialize_semigroup(FiniteSemigroup(1, {0})) == "1\n0\n");
  CHECK(serialize_semigroup(FiniteSemigroup(2, {0, 1, 1, 0})) ==
        "2\n0 1\n1 0\n");

  for (const auto& s : enumerate_semigroups(3, true)) {
    auto back = parse_semigroup(serialize_semigroup(s));
    CHECK(back.table() == s.table());
  }
}

TEST_CASE("semigroup parser skips comments and blanks, keeps line numbers") {
  auto s = parse_semigroup("# a table\n\n2\n  0 1\n1 0\n# trailing\n");
  CHECK(s.order() == 2);
  CHECK(s.product(1, 1) == 0);

  try {
    parse_semigroup("# pad\n\n2\n0 0\n0 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("semigroup parser rejects malformed input") {
  CHECK_THROWS_AS(parse_semigroup(""), ParseError);
  CHECK_THROWS_AS(parse_semigroup("# only comments\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("2\n0 0\n0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("2\n0 0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("2\n0 x\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("2\n0 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("0\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("5000\n"), ParseError);
  // well-formed text describing a non-associative table fails construction
  CHECK_THROWS_AS(parse_semigroup("2\n1 1\n1 0\n"), std::invalid_argument);
}

TEST_CASE("grade text round-trips and accepts rows in any order") {
  FiniteSemigroup z2(2, {0, 1, 1, 0});
  auto a = parse_ifs("2 2\n1 2 0\n0 1 1\n", z2);
  CHECK(a.resolution() == 2);
  CHECK(a.mu_num(0) == 1);
  CHECK(a.nu_num(0) == 1);
  CHECK(a.mu_num(1) == 2);
  CHECK(a.nu_num(1) == 0);
  CHECK(serialize_ifs(a) == "2 2\n0 1 1\n1 2 0\n");

  for (const auto& x : sample_ifs(z2, 4, 2024, 25)) {
    CHECK(parse_ifs(serialize_ifs(x), z2) == x);
  }
}

TEST_CASE("grade parser rejects malformed input") {
  FiniteSemigroup z2(2, {0, 1, 1, 0});
  FiniteSemigroup t(1, {0});
  CHECK_THROWS_AS(parse_ifs("", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("2 3\n0 0 0\n1 0 0\n2 0 0\n", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("0 2\n0 0 0\n1 0 0\n", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("2 2\n0 1 1\n", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("2 2\n0 1 1\n0 1 1\n", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("2 2\n0 1 1\n2 1 1\n", z2), ParseError);
  CHECK_THROWS_AS(parse_ifs("2 2\n0 1 1\n1 -1 1\n", z2), ParseError);

  try {
    parse_ifs("2 1\n0 3 0\n", t);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("mu + nu <= 2") != std::string::npos);
  }
}

TEST_CASE("point index sidecar lists every point with its grades") {
  FiniteSemigroup t(1, {0});
  auto p = PointSemigroup::materialize(t, 2);
  CHECK(serialize_point_index(p) ==
        "# point_id element mu_num nu_num D\n"
        "0 0 1 0 2\n"
        "1 0 1 1 2\n"
        "2 0 2 0 2\n");
}

TEST_CASE("manifest parser trims entries and drops comments") {
  auto paths = parse_manifest("# suite\n  a.sg \nb.sg\n\n\t c/d.sg\n");
  REQUIRE(paths.size() == 3);
  CHECK(paths[0] == "a.sg");
  CHECK(paths[1] == "b.sg");
  CHECK(paths[2] == "c/d.sg");
  CHECK(parse_manifest("# nothing\n\n").empty());
}

TEST_CASE("file reads and writes round-trip") {
  auto path =
      (std::filesystem::temp_directory_path() / "ifsg_io_test.txt").string();
  write_file(path, "2\n0 0\n0 0\n");
  CHECK(read_file(path) == "2\n0 0\n0 0\n");
  CHECK(parse_semigroup(read_file(path)).order() == 2);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), ParseError);
}
