#include <doctest.h>

#include "primcycle/io.hpp"

using namespace primcycle;

TEST_SUITE("io") {

TEST_CASE("GroupSpec files round trip") {
  for (auto g : {projective(3, 2, 1, 1), sporadic("M11@12"), wreath_imprimitive(2, 3),
                 projective_line_gamma(3, 2, LineGroup::PGammaL2)}) {
    auto file = to_spec_file(g);
    auto text = to_json(file).dump(2);
    auto back = parse_group_spec(text);
    CHECK(back.spec.degree == g.spec.degree);
    CHECK(back.spec.generators == g.spec.generators);
    CHECK(back.spec.label == g.spec.label);
    CHECK(back.descriptor == g.descriptor);
    CHECK(back.witness_cycle == g.witness_cycle);
    CHECK(to_json(back).dump(2) == text);
  }
}

TEST_CASE("GroupSpec JSON shape") {
  auto j = to_json(to_spec_file(projective(3, 2, 1, 1)));
  CHECK(j["degree"] == 7);
  CHECK(j["point_base"] == 1);
  CHECK(j["generators"].is_array());
  CHECK(j["witness_cycle"].get<std::string>().size() > 2);
  CHECK(j["descriptor"]["tag"] == "1b");
}

TEST_CASE("minimal spec without optional fields") {
  auto f = parse_group_spec(R"j({"degree": 4, "generators": ["(1 2 3 4)", "()"]})j");
  CHECK(f.spec.degree == 4);
  CHECK(f.spec.generators.size() == 2);
  CHECK_FALSE(f.descriptor);
  CHECK_FALSE(f.witness_cycle);
  CHECK_FALSE(f.spec.label);
}

TEST_CASE("errors report line and column") {
  auto expect_error = [](const char *text, std::size_t line, std::size_t column) {
    try {
      parse_group_spec(text);
      FAIL("expected SpecFileError");
    } catch (const SpecFileError &e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  // Point 7 sits at column 23 of line 3.
  expect_error("{\n \"degree\": 5,\n \"generators\": [\"(1 2 7)\"]\n}", 3, 23);
  // A missing closing parenthesis is reported at the closing quote.
  expect_error("{\"degree\": 3,\n\"generators\": [\n  \"(1 2\"]}", 3, 8);
  // Broken JSON.
  expect_error("{\"degree\": 3,\n\"generators\": [}", 2, 16);

  CHECK_THROWS_AS(parse_group_spec(R"j({"generators": []})j"), SpecFileError);
  CHECK_THROWS_AS(parse_group_spec(R"j({"degree": 3, "generators": "(1 2)"})j"), SpecFileError);
  CHECK_THROWS_AS(parse_group_spec(R"j({"degree": 3, "point_base": 0, "generators": []})j"),
                  SpecFileError);
  CHECK_THROWS_AS(parse_group_spec(R"j({"degree": 3, "generators": [12]})j"), SpecFileError);
  CHECK_THROWS_AS(
      parse_group_spec(R"j({"degree": 3, "generators": [], "descriptor": {"tag": "9", "n": 3}})j"),
      SpecFileError);
}

TEST_CASE("CaseList JSON") {
  auto j = to_json(classify(23, 0));
  CHECK(j["n"] == 23);
  CHECK(j["k"] == 0);
  REQUIRE(j["cases"].size() == 4);
  CHECK(j["cases"][0]["tag"] == "1a");
  CHECK(j["cases"][0]["p"] == 23);
  CHECK(j["cases"][1]["tag"] == "1c");
  CHECK(j["cases"][1]["p"].is_null());
  CHECK(j["cases"][2]["tag"] == "A_n");
  CHECK(j["cases"][3]["group"] == "S_23");
  for (const auto &c : j["cases"])
    for (const char *key : {"tag", "p", "q", "d", "n", "note"})
      CHECK(c.contains(key));
}

TEST_CASE("descriptor JSON round trip") {
  for (std::size_t n = 2; n <= 30; ++n)
    for (std::size_t k = 0; k <= 2 && k + 2 <= n; ++k)
      for (const auto &c : classify(n, k).cases)
        for (const auto &m : sandwich_members(c.descriptor))
          CHECK(descriptor_from_json(to_json(m)) == m);
  auto w = wreath_imprimitive(3, 4).descriptor;
  CHECK(descriptor_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(descriptor_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(descriptor_from_json(Json{{"tag", "1a"}}), std::invalid_argument);
}

} // TEST_SUITE
