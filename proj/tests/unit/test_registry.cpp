#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "vsa/registry.hpp"

using namespace vsa;

TEST_CASE("registry lookup by id, name and alias") {
  auto reg = Registry::load();
  CHECK(reg.entries().size() >= 7);
  const auto* e = reg.find("ksle");
  REQUIRE(e);
  CHECK(e->id == "ksle5-10");
  CHECK(reg.find("ksle(5|10)") == e);
  CHECK(reg.find("kas(1|6)") == reg.find("kas"));
  CHECK(reg.find("nosuch") == nullptr);
  CHECK_THROWS_AS(reg.require("nosuch"), Error);
  for (const auto& a : reg.entries()) {
    auto r = make_realization(a);
    for (const auto& [side, info] : a.sides) {
      auto t = generator_table(a, r, side);
      CHECK(t.generators.size() == info.generators.size());
      CHECK_NOTHROW(generator_degrees(a, *r, side));
    }
  }
}

TEST_CASE("generator degrees and relation files") {
  auto reg = Registry::load();
  const auto& e = reg.require("heisenberg2");
  auto r = make_realization(e);
  for (const auto& [name, d] : generator_degrees(e, *r, "-")) CHECK(d == -1);
  CHECK(load_relations(reg, e).empty());
  CHECK_THROWS_AS(generator_table(e, r, "+"), Error);

  const auto& k = reg.require("ksle5-10");
  auto plus = load_relations(reg, k, "+");
  auto all = load_relations(reg, k);
  REQUIRE(!plus.empty());
  CHECK(all.size() > plus.size());
  CHECK(plus[0].lhs == "[X1,X3]");
  for (const auto& rec : plus) CHECK(rec.side == "+");
}

TEST_CASE("relation records") {
  auto recs = parse_relations(
      "{\"side\":\"+\",\"class\":\"rel\",\"lhs\":\"[a,b]\"}\n"
      "\n"
      "{\"side\":\"-\",\"class\":\"weight\",\"lhs\":\"a\",\"weight\":[1,\"-1/2\"]}\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].line == 1);
  CHECK(recs[0].rhs == "0");
  CHECK(recs[1].line == 3);
  REQUIRE(recs[1].weight.size() == 2);
  CHECK(recs[1].weight[1] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_relations("{\"side\": \n"), Error);
}

TEST_CASE("grading presets") {
  auto reg = Registry::load();
  auto g = preset(reg, "kas", "0");
  CHECK(g.label == "0");
  auto v = preset(reg, "vect(2|1)", "0");
  CHECK(v.degrees == std::map<std::string, int>{{"x1", 1}, {"x2", 1}, {"th1", 1}});
  auto k = preset(reg, "k(3|2)", "0");
  CHECK(k.degrees.at("t") == 2);
  CHECK(k.degrees.at("p1") == 1);
  CHECK(k.degrees.at("eta1") == 1);
  CHECK(preset(reg, "m(2)", "0").degrees.at("tau") == 2);
  CHECK_THROWS_AS(preset(reg, "k(2|0)", "0"), Error);
  CHECK_THROWS_AS(preset(reg, "vect(2|1)", "1"), Error);
  CHECK_THROWS_AS(preset(reg, "nosuch", "0"), Error);
}

TEST_CASE("data directory from the environment") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "vsa_registry_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "registry.json");
    out << R"({"algebras": {"line": {"realization": {"kind": "vect", "even": ["x"]},
              "gradings": {"0": {"x": 1}}, "sides": {}}}})";
  }
  ::setenv("SUPERLIE_DATA", dir.c_str(), 1);
  CHECK(Registry::default_dir() == dir);
  auto reg = Registry::load();
  ::unsetenv("SUPERLIE_DATA");
  REQUIRE(reg.entries().size() == 1);
  const auto& e = reg.require("line");
  CHECK(e.name == "line");
  CHECK(make_realization(e)->coordinates()->size() == 1);

  {
    std::ofstream out(dir / "registry.json");
    out << R"({"algebras": {"bad": {}}})";
  }
  CHECK_THROWS_AS(Registry::load(dir), Error);
  CHECK_THROWS_AS(Registry::load(dir / "missing"), Error);
  fs::remove_all(dir);
}
