#include "doctest.h"

#include <random>

#include "mckay/io.hpp"

using namespace mckay;
using io::Json;

namespace {

template <class Parse, class Write>
void check_round_trip(const Json& j, Parse parse, Write write) {
  const auto text = io::dump(j);
  const auto again = io::dump(write(parse(io::parse_json(text))));
  CHECK(again == text);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kUsage;
}

}  // namespace

TEST_CASE("rationals") {
  for (const char* s : {"0", "-3", "7/2", "-1/3"}) CHECK(io::rational_to_json(io::rational_from_json(Json(s))) == Json(s));
  CHECK(io::rational_from_json(Json(4)) == 4);
  CHECK(io::rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(code_of([] { io::rational_from_json(Json(0.5)); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::rational_from_json(Json("1/0")); }) == ErrorCode::kParse);
}

TEST_CASE("quiver round trip") {
  for (const char* name : {"A1", "A3", "D4", "E6", "E8"}) {
    const auto g = build_group(parse_descriptor(name));
    const auto q = mckay_quiver(g);
    for (const auto& variant : {q, triple_quiver(q), frame_quiver(q, one_bar(g)), frame_quiver(triple_quiver(q), delta(g))}) {
      const auto parsed = io::quiver_from_json(io::quiver_to_json(variant));
      CHECK(parsed == variant);
      check_round_trip(io::quiver_to_json(variant), io::quiver_from_json, io::quiver_to_json);
    }
  }
  const auto short_form = io::parse_json(R"({"group": "A2", "framing": [1, 0, 0], "tripled": true})");
  const auto g = build_group(parse_descriptor("A2"));
  CHECK(io::quiver_from_json(short_form) == frame_quiver(triple_quiver(mckay_quiver(g)), one_bar(g)));
}

TEST_CASE("quiver documents that disagree with the group are rejected") {
  auto j = io::quiver_to_json(mckay_quiver(build_group(parse_descriptor("A2"))));
  j["arrows"][0]["tail"] = "2";
  CHECK(code_of([&] { io::quiver_from_json(j); }) == ErrorCode::kParse);
  j = io::quiver_to_json(mckay_quiver(build_group(parse_descriptor("A2"))));
  j["arrows"].erase(0);
  CHECK(code_of([&] { io::quiver_from_json(j); }) == ErrorCode::kParse);
  CHECK(code_of([] { io::quiver_from_json(io::parse_json(R"({"group": "A0"})")); }) == ErrorCode::kInvalidDescriptor);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    io::parse_json("{\n  \"a\": [1,\n  }", "file.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("file.json:3:") != std::string::npos);
  }
}

TEST_CASE("module round trip") {
  std::mt19937_64 rng(4);
  for (const char* name : {"A1", "A2", "D4"}) {
    const auto g = build_group(parse_descriptor(name));
    const auto q = frame_quiver(mckay_quiver(g), one_bar(g));
    for (int t = 0; t < 5; ++t) {
      std::vector<std::size_t> dims(static_cast<std::size_t>(q.vertex_count()), 0);
      dims.back() = 1;
      for (int k = 0; k < 4; ++k) ++dims[rng() % (dims.size() - 1)];
      const auto m = random_flat_rep<Rational>(q, dims, rng);
      const auto parsed = io::module_from_json(io::module_to_json(m));
      CHECK(parsed.dims == m.dims);
      CHECK(parsed.maps == m.maps);
      check_round_trip(io::module_to_json(m), io::module_from_json, io::module_to_json);
    }
  }
}

TEST_CASE("module files: shapes, missing maps, bad entries") {
  const auto text = R"({
    "quiver": {"group": "A1", "framing": [1, 0]},
    "dims": {"0": 1, "1": 1, "inf": 1},
    "maps": {"1": [["1"]], "4": [["1"]]}
  })";
  const auto m = io::module_from_json(io::parse_json(text));
  CHECK(m.dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(m.maps[0].is_zero());
  CHECK(m.maps[1](0, 0) == 1);
  CHECK(is_flat(m));

  auto j = io::parse_json(text);
  j["maps"]["1"] = Json::parse(R"([["1", "2"]])");
  CHECK(code_of([&] { io::module_from_json(j); }) == ErrorCode::kParse);
  j = io::parse_json(text);
  j["maps"]["9"] = Json::parse(R"([["1"]])");
  CHECK(code_of([&] { io::module_from_json(j); }) == ErrorCode::kParse);
  j = io::parse_json(text);
  j["dims"]["7"] = 1;
  CHECK(code_of([&] { io::module_from_json(j); }) == ErrorCode::kParse);
  j = io::parse_json(text);
  j["maps"]["1"] = Json::parse(R"([["x"]])");
  CHECK(code_of([&] { io::module_from_json(j); }) == ErrorCode::kParse);
}

TEST_CASE("ADHM round trip and construction") {
  const auto j = io::parse_json(R"({"group": "A1", "B1": [["0","0"],["1","0"]], "B2": [["0","0"],["0","0"]],
    "i": [["1"],["0"]], "j": [["0","0"]], "weights": [0, 1], "framing_weights": [0]})");
  check_round_trip(j, io::adhm_from_json, io::adhm_to_json);
  const auto m = adhm_build_cyclic(io::adhm_from_json(j));
  CHECK(m.dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(is_stable_for(m, {0, 1}));
  auto bad = j;
  bad["B1"] = Json::parse(R"([["0"]])");
  CHECK(code_of([&] { io::adhm_from_json(bad); }) == ErrorCode::kParse);
}

TEST_CASE("truncated graded module round trip") {
  const auto g = build_group(parse_descriptor("A2"));
  const GradedAlgebra pb(g, AlgebraKind{AlgebraBase::GradedPreprojective, std::vector<int>{0}});
  const auto m = free_truncated_module(pb, 0, 0, 4);
  const auto parsed = io::truncated_from_json(io::truncated_to_json(m));
  CHECK(parsed == m);
  check_round_trip(io::truncated_to_json(m), io::truncated_from_json, io::truncated_to_json);
  auto j = io::truncated_to_json(m);
  j["degrees"].erase(1);
  CHECK(code_of([&] { io::truncated_from_json(j); }) == ErrorCode::kParse);
}

TEST_CASE("exit codes") {
  CHECK(io::exit_code(ErrorCode::kInvalidDescriptor) == 2);
  CHECK(io::exit_code(ErrorCode::kUsage) == 2);
  CHECK(io::exit_code(ErrorCode::kDegreeCapExceeded) == 3);
  CHECK(io::exit_code(ErrorCode::kRelationViolation) == 5);
  CHECK(io::exit_code(ErrorCode::kNotStableForSource) == 6);
}
