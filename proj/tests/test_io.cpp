#include <doctest.h>

#include "helpers.hpp"
#include "lpm/io.hpp"

using namespace lpm;
using io::json;

TEST_CASE("integers stay exact") {
  CHECK(io::integer_to_json(Integer(-7)) == json(-7));
  const Integer big = Integer(1) << 80;
  const json j = io::integer_to_json(big);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "1208925819614629174706176");
  CHECK(io::integer_from_json(j) == big);
  CHECK(io::integer_from_json(json("-12")) == -12);
  CHECK(io::integer_from_json(json(18446744073709551615ull)) == Integer("18446744073709551615"));
  CHECK_THROWS_AS(io::integer_from_json(json("1e3")), std::invalid_argument);
  CHECK_THROWS_AS(io::integer_from_json(json("-")), std::invalid_argument);
  CHECK_THROWS_AS(io::integer_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("pencil round trip in every model") {
  const Pencil t = testing::abab();
  CHECK(io::pencil_from_json(io::pencil_to_json(t)) == t);

  const FiberModel S = FiberModel::symplectic_homology(2);
  const Pencil sp(S, {Cycle::homology(S, {1, 0, 0, 0}), Cycle::homology(S, {0, 1, 1, 0})});
  CHECK(io::pencil_from_json(io::pencil_to_json(sp)) == sp);

  const FiberModel D = FiberModel::punctured_disc(3);
  const Pencil d(D, {Cycle::standard_curve(D, 1, 2), Cycle::standard_curve(D, 2, 3)});
  const json j = io::pencil_to_json(d);
  CHECK(j["fiber"]["model"] == "disc");
  CHECK(io::pencil_from_json(j) == d);
  CHECK(io::pencil_from_json(json::parse(j.dump())) == d);
}

TEST_CASE("pencil documents from text") {
  const auto p = io::pencil_from_json(json::parse(R"({"fiber":{"model":"torus"},"cycles":[[1,0],[0,1]]})"));
  CHECK(p == testing::ab());
  // sign normalisation
  const auto q = io::pencil_from_json(json::parse(R"({"fiber":{"model":"torus"},"cycles":[[-1,0],[0,-1]]})"));
  CHECK(q == testing::ab());
}

TEST_CASE("malformed pencil documents") {
  auto bad = [](const char* text) { return io::pencil_from_json(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"torus"},"cycles":[[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"torus"},"cycles":[[2,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"torus"},"cycles":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"klein"},"cycles":[[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"sp"},"cycles":[[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"cycles":[[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"torus"},"cycles":"x"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"disc","punctures":3},"cycles":[[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"fiber":{"model":"disc","punctures":3},"cycles":["x4"]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"([1])"), std::invalid_argument);
}

TEST_CASE("fiber elements") {
  const FiberModel T = FiberModel::torus();
  const FiberElement g = dehn_twist(testing::torus_cycle(1, 0));
  const json j = io::element_to_json(g);
  CHECK(j == json::parse("[[1,-1],[0,1]]"));
  CHECK(elem_eq(io::element_from_json(T, j), g));
  CHECK(elem_eq(io::element_from_json(T, json::parse("[1,-1,0,1]")), g));
  CHECK_THROWS_AS(io::element_from_json(T, json::parse("[[2,0],[0,1]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::element_from_json(T, json::parse("[[1,0,0],[0,1]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::element_from_json(T, json::parse("\"s1\"")), std::invalid_argument);

  const FiberModel D = FiberModel::punctured_disc(3);
  const FiberElement b = FiberElement::braid(D, parse_braid("s1 S2", 3));
  CHECK(io::element_to_json(b) == json("s1 S2"));
  CHECK(elem_eq(io::element_from_json(D, json("s1 S2")), b));
}

TEST_CASE("automorphisms") {
  const FiberModel T = FiberModel::torus();
  const Automorphism a{parse_braid("S2 s1 s2", 4), FiberElement::identity(T)};
  const Automorphism back = io::automorphism_from_json(T, 4, io::automorphism_to_json(a));
  CHECK(back.b == a.b);
  CHECK(elem_eq(back.g, a.g));
  const Automorphism d = io::automorphism_from_json(T, 4, json::parse(R"({"braid":"s1"})"));
  CHECK(elem_eq(d.g, FiberElement::identity(T)));
  CHECK_THROWS_AS(io::automorphism_from_json(T, 4, json::parse(R"({"fiber_element":[[1,0],[0,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::automorphism_from_json(T, 2, json::parse(R"({"braid":"s3"})")), std::invalid_argument);
}

TEST_CASE("arcs and files") {
  CHECK(io::arc_to_json(Arc{2, parse_braid("S3", 4)}) == json::parse(R"({"base":2,"carrier":"S3"})"));
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), std::invalid_argument);
  const json j = io::read_json_file(std::string(LPM_TEST_DATA) + "/torus_abab.json");
  CHECK(io::pencil_from_json(j) == testing::abab());
  CHECK_THROWS_AS(io::read_json_file(std::string(LPM_TEST_DATA) + "/not_json.txt"), std::invalid_argument);
}
