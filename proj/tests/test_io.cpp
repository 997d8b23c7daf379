#include <doctest.h>

#include <functional>
#include <string>

#include "mdeg/io.hpp"
#include "test_util.hpp"

using namespace mdeg;
using io::json;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("quiver spec parsing") {
  json j = json::parse(R"({"type":"A","rank":3,"arrows":[[1,2],[3,2]],"height":{"1":1,"2":0,"3":1}})");
  Quiver q = Quiver::build(io::parse_quiver_spec(j));
  CHECK(q.name() == "A3");
  CHECK(q.height(2) == 0);
  CHECK(Quiver::build(io::parse_quiver_spec(io::quiver_to_json(q))).heights() == q.heights());

  json rooted = json::parse(R"({"format":1,"type":"A","rank":3,"arrows":[[1,2],[3,2]],"root":[2,0]})");
  CHECK(Quiver::build(io::parse_quiver_spec(rooted)).height(1) == 1);

  json no_height = json::parse(R"({"type":"D","rank":4,"arrows":[[1,2],[3,2],[4,2]]})");
  CHECK(Quiver::build(io::parse_quiver_spec(no_height)).height(2) == -1);
}

TEST_CASE("quiver spec errors name the field") {
  auto err = [](const char* text) {
    return message_of([&] { Quiver::build(io::parse_quiver_spec(json::parse(text))); });
  };
  CHECK(starts_with(err(R"({"rank":3,"arrows":[]})"), "type"));
  CHECK(starts_with(err(R"({"type":"F","rank":4,"arrows":[]})"), "type"));
  CHECK(starts_with(err(R"({"type":"A","arrows":[]})"), "rank"));
  CHECK(starts_with(err(R"({"type":"A","rank":2})"), "arrows"));
  CHECK(starts_with(err(R"({"type":"A","rank":2,"arrows":[[1]]})"), "arrows"));
  CHECK(starts_with(err(R"({"type":"A","rank":2,"arrows":[[1,2]],"height":[1,0]})"), "height"));
  CHECK(starts_with(err(R"({"format":7,"type":"A","rank":1,"arrows":[]})"), "format"));
  CHECK(err(R"({"type":"A","rank":2,"arrows":[[1,2]],"height":{"1":0,"2":0}})").find("height") !=
        std::string::npos);
  CHECK(starts_with(message_of([] { io::load_quiver("/nonexistent/q.json"); }), "quiver file"));
}

TEST_CASE("bundled quiver files load") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "E6"}) {
    Quiver q = io::load_quiver(std::string(MDEG_DATA_DIR) + "/" + name + ".json");
    CHECK(q.name() == name);
  }
  Quiver a3 = io::load_quiver(std::string(MDEG_DATA_DIR) + "/A3.json");
  CHECK(a3.heights() == test::a3().heights());
}

TEST_CASE("vertex, window, monomial and object literals") {
  CHECK(io::parse_vertex("2,-2", "--start") == Vertex{2, -2});
  CHECK(io::parse_vertex(" 3 , 1 ", "--start") == Vertex{3, 1});
  CHECK(starts_with(message_of([] { io::parse_vertex("2;0", "--start"); }), "--start"));
  CHECK(io::parse_window("-2..4", "--window") == std::pair{-2, 4});
  CHECK(starts_with(message_of([] { io::parse_window("4..-2", "--window"); }), "--window"));
  CHECK(starts_with(message_of([] { io::parse_window("0-4", "--window"); }), "--window"));

  LaurentMonomial m = io::parse_monomial("Y[1,1]*Y[1,3]^2", "--m");
  CHECK(m.exponent({1, 3}) == 2);
  CHECK(io::parse_monomial("1", "--m").is_one());
  CHECK(io::parse_monomial("[[1,1,1],[1,3,2]]", "--m") == m);
  CHECK(io::parse_monomial("Y[2,2]^-1", "--m").exponent({2, 2}) == -1);
  CHECK(starts_with(message_of([] { io::parse_monomial("X[1,1]", "--m"); }), "--m"));
  CHECK(starts_with(message_of([] { io::parse_monomial("", "--m"); }), "--m"));
  CHECK(starts_with(message_of([] { io::parse_monomial("[[1,1]]", "--m"); }), "--m"));

  DerivedObject x = io::parse_object("V(2,-2)+V(2,0)+V(2,0)", "--object");
  CHECK(x.multiplicity({2, 0}) == 2);
  CHECK(io::parse_object("0", "--object").is_zero());
  CHECK(io::parse_object("[[2,-2,1],[2,0,2]]", "--object") == x);
  CHECK(starts_with(message_of([] { io::parse_object("V(2,0", "--object"); }), "--object"));
  CHECK(starts_with(message_of([] { io::parse_object("[[2,0,-1]]", "--object"); }), "--object"));
}

TEST_CASE("text literals round-trip") {
  std::mt19937 rng(17);
  Quiver q = test::a4();
  for (int trial = 0; trial < 50; ++trial) {
    DerivedObject x = test::random_object(q, rng, -5, 5, 1 + trial % 4);
    CHECK(io::parse_object(x.to_string(), "x") == x);
    CHECK(io::parse_object(io::object_to_json(x).dump(), "x") == x);
    LaurentMonomial m = to_monomial(x);
    CHECK(io::parse_monomial(m.to_string(), "m") == m);
    CHECK(io::parse_monomial(io::monomial_to_json(m).dump(), "m") == m);
  }
}

TEST_CASE("serializers") {
  Quiver a3 = test::a3();
  DegPoset d = deg_set(a3, DerivedObject{{2, -2}, {2, 0}, {2, 2}});
  json j = io::deg_poset_to_json(a3, d);
  CHECK(j["format"] == 1);
  CHECK(j["size"] == 6);
  CHECK(j["covers"].size() == d.covers().size());
  std::string dot = io::deg_poset_to_dot(d);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("Y[2,-2]*Y[2,0]*Y[2,2]") != std::string::npos);

  auto par = parallelogram_solve(a3, {3, -1}, {3, 1});
  REQUIRE(par);
  json pj = io::parallelogram_to_json(a3, *par);
  CHECK(pj["middle_object"] == "V(2,0)");
  CHECK(pj["condition"] == "C1");

  Hammock h = knit_hammock(test::a2(), {1, 1});
  json hj = io::hammock_to_json(h, 0, 10);
  CHECK(hj["dims"] == json::parse("[[1,1,1],[2,2,1]]"));
}
