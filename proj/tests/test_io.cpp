#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ncinv/error.hpp"
#include "ncinv/io.hpp"

using namespace ncinv;

namespace {
Json minimal_doc() {
  return Json::parse(R"({
    "algebra": {
      "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
      "relations": [[{"coeff": 1, "word": ["x","y"]},
                     {"coeff": 1, "word": ["y","x"]}]]
    },
    "action": {"group": {"generators": [[[0,1],[1,0]]]}}
  })");
}
}  // namespace

TEST_CASE("minimal document parses") {
  InputDocument doc = parse_input(minimal_doc());
  CHECK(doc.algebra.gens.size() == 2);
  CHECK(doc.algebra.relations.size() == 1);
  REQUIRE(doc.group.has_value());
  CHECK(doc.run.max_degree == 8);
}

TEST_CASE("unknown keys are rejected with a location") {
  Json j = minimal_doc();
  j["algebra"]["extra"] = 1;
  try {
    parse_input(j);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
    CHECK(std::string(e.what()).find("/algebra/extra") != std::string::npos);
  }
}

TEST_CASE("non-homogeneous relations are schema errors") {
  Json j = minimal_doc();
  j["algebra"]["relations"] = Json::parse(
      R"([[{"coeff": 1, "word": ["x","x"]}, {"coeff": 1, "word": ["y"]}]])");
  CHECK_THROWS_AS(parse_input(j), Error);
}

TEST_CASE("bad rationals and unknown generators are schema errors") {
  Json j = minimal_doc();
  j["algebra"]["relations"][0][0]["coeff"] = "not-a-number";
  CHECK_THROWS_AS(parse_input(j), Error);
  j = minimal_doc();
  j["algebra"]["relations"][0][0]["word"] = Json::array({"zz"});
  CHECK_THROWS_AS(parse_input(j), Error);
}

TEST_CASE("exactly one action block is required") {
  Json j = minimal_doc();
  j["action"] = Json::object();
  CHECK_THROWS_AS(parse_input(j), Error);
}

TEST_CASE("round trip: parse(serialize(doc)) = doc") {
  Json j = minimal_doc();
  j["field"] = Json{{"minpoly", Json::array({1, 0, 1})}, {"label", "Q(i)"}};
  j["series_hints"] = Json{{"T", Json::array({Json{{"product", {1, 1}}}})}};
  InputDocument doc = parse_input(j);
  Json ser = serialize_input(doc);
  InputDocument doc2 = parse_input(ser);
  Json ser2 = serialize_input(doc2);
  CHECK(ser == ser2);
}

TEST_CASE("scalar rendering over extensions") {
  NumberField f = NumberField::make({Int(1), Int(1), Int(1)}, "Q(w)");
  Scalar s = f.add(f.one(), f.generator());
  Json js = scalar_to_json(f, s);
  REQUIRE(js.is_array());
  CHECK(js[0] == "1");
  CHECK(js[1] == "1");
}

TEST_CASE("timing fields are stripped for golden comparisons") {
  Json j = Json::parse(R"({"a": {"timing_ms": {"x": 12}, "keep": 1},
                           "timing_ms": {"total": 5}})");
  strip_timing(j);
  CHECK(!j.contains("timing_ms"));
  CHECK(!j["a"].contains("timing_ms"));
  CHECK(j["a"]["keep"] == 1);
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("ncinv") == fnv1a64_hex("ncinv"));
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}
