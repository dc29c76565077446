#include <doctest.h>

#include <cstdio>
#include <string>

#include "demdesc/char_io.hpp"
#include "demdesc/sampling.hpp"

using namespace demdesc;

TEST_SUITE("io") {

TEST_CASE("character serialization is canonical and frozen") {
  auto a2 = RootDatum::create(Series::A, 2);
  Character f(a2);
  f.add_term(Weight{1, 1}, 1);
  f.add_term(Weight{0, 0}, -2);
  const std::string expect =
      "{\n"
      "  \"root_datum\": \"A2\",\n"
      "  \"terms\": [\n"
      "    {\n"
      "      \"coeff\": 1,\n"
      "      \"weight\": [\n"
      "        1,\n"
      "        1\n"
      "      ]\n"
      "    },\n"
      "    {\n"
      "      \"coeff\": -2,\n"
      "      \"weight\": [\n"
      "        0,\n"
      "        0\n"
      "      ]\n"
      "    }\n"
      "  ]\n"
      "}\n";
  CHECK(character_to_json(f) == expect);
}

TEST_CASE("character round trip over random inputs") {
  Sampler s(40);
  for (const char* tag : {"A1", "A2", "B3", "G2", "E6"}) {
    auto rd = RootDatum::from_tag(tag);
    for (int round = 0; round < 12; ++round) {
      const Character f = s.random_character(rd);
      const std::string text = character_to_json(f);
      CAPTURE(tag);
      CHECK(character_from_json(text) == f);
      // Emission of a parsed document reproduces the same bytes.
      CHECK(character_to_json(character_from_json(text)) == text);
    }
  }
}

TEST_CASE("input order is free and duplicates accumulate") {
  const Character f = character_from_json(
      R"({"root_datum": "a2",
          "terms": [{"weight": [0, 1], "coeff": 2},
                    {"weight": [1, 0], "coeff": -1},
                    {"weight": [0, 1], "coeff": 3},
                    {"weight": [2, 2], "coeff": 0}]})");
  CHECK(f.datum()->tag() == "A2");
  CHECK(f.support_size() == 2);
  CHECK(f.coeff(Weight{0, 1}) == 5);
  CHECK(f.coeff(Weight{1, 0}) == -1);
  CHECK(f.coeff(Weight{2, 2}) == 0);
}

TEST_CASE("coefficients beyond int64 use decimal strings") {
  auto a1 = RootDatum::create(Series::A, 1);
  const Int big = Int("18446744073709551616");  // 2^64
  Character f(a1);
  f.add_term(Weight{0}, big);
  const std::string text = character_to_json(f);
  CHECK(text.find("\"18446744073709551616\"") != std::string::npos);
  CHECK(character_from_json(text) == f);

  // int64-range values stay plain numbers.
  Character g(a1);
  g.add_term(Weight{0}, Int("9223372036854775807"));
  CHECK(character_to_json(g).find("\"9223372036854775807\"") == std::string::npos);
  CHECK(character_from_json(character_to_json(g)) == g);

  // String form is accepted for small values too, with an optional sign.
  const Character h = character_from_json(
      R"({"root_datum": "A1", "terms": [{"weight": [1], "coeff": "-7"}]})");
  CHECK(h.coeff(Weight{1}) == -7);
}

TEST_CASE("character parse errors") {
  CHECK_THROWS_AS((void)character_from_json("not json"), ParseError);
  CHECK_THROWS_AS((void)character_from_json("[1,2]"), ParseError);
  CHECK_THROWS_AS((void)character_from_json(R"({"terms": []})"), ParseError);
  CHECK_THROWS_AS((void)character_from_json(R"({"root_datum": "A2"})"), ParseError);
  CHECK_THROWS_AS((void)character_from_json(R"({"root_datum": "Q5", "terms": []})"), InvalidType);
  CHECK_THROWS_AS(
      (void)character_from_json(R"({"root_datum": "A2", "terms": [{"weight": [1], "coeff": 1}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(
          R"({"root_datum": "A2", "terms": [{"weight": [1, 0.5], "coeff": 1}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(
          R"({"root_datum": "A2", "terms": [{"weight": [1, 0], "coeff": 1.5}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(
          R"({"root_datum": "A2", "terms": [{"weight": [1, 0], "coeff": "12x"}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(
          R"({"root_datum": "A2", "terms": [{"weight": [1, 0], "coeff": "-"}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(
          R"({"root_datum": "A2", "terms": [{"weight": [200000, 0], "coeff": 1}]})"),
      ParseError);
  CHECK_THROWS_AS(
      (void)character_from_json(R"({"root_datum": "A2", "terms": [{"weight": [1, 0]}]})"),
      ParseError);
}

TEST_CASE("decomposition round trip and validation") {
  Sampler s(41);
  for (const char* tag : {"A2", "B3", "G2"}) {
    auto rd = RootDatum::from_tag(tag);
    for (int round = 0; round < 10; ++round) {
      const GDecomposition d = s.random_decomposition(rd);
      const std::string text = decomposition_to_json(d);
      CAPTURE(tag);
      CHECK(decomposition_from_json(text) == d);
      CHECK(decomposition_to_json(decomposition_from_json(text)) == text);
    }
  }
  CHECK_THROWS_AS(
      (void)decomposition_from_json(
          R"({"root_datum": "A2", "entries": [{"highest_weight": [-1, 0], "mult": 1}]})"),
      NotDominant);
  CHECK_THROWS_AS((void)decomposition_from_json(R"({"root_datum": "A2", "entries": 3})"),
                  ParseError);
}

TEST_CASE("file helpers") {
  const std::string path = "io_test_scratch.json";
  auto a1 = RootDatum::create(Series::A, 1);
  Character f(a1);
  f.add_term(Weight{3}, 4);
  write_file(path, character_to_json(f));
  CHECK(character_from_json(read_file(path)) == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)read_file("definitely_missing_file.json"), IoError);
}

}  // TEST_SUITE
