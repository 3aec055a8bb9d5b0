#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpm/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpm::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LPM_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"pencil"}).code == 2);
  CHECK(run({"pencil", "validate"}).code == 2);
  CHECK(run({"pencil", "validate", data("torus_ab.json"), "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "cutoff", "--k", "ten", "--D", "1", "--c0", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("pencil validate") {
  const Run a = run({"pencil", "validate", data("torus_abab.json")});
  CHECK(a.code == 0);
  CHECK(a.doc()["valid"] == true);
  CHECK(a.doc()["cycles"] == 4);
  const Run b = run({"pencil", "validate", data("torus_ab.json"), "--closed"});
  CHECK(b.code == 1);
  CHECK(b.doc()["closed"] == false);
  CHECK(run({"pencil", "validate", data("bad_cycle.json")}).code == 2);
  CHECK(run({"pencil", "validate", data("not_json.txt")}).code == 2);
  CHECK(run({"pencil", "validate", data("missing.json")}).code == 2);
}

TEST_CASE("pencil hurwitz") {
  const Run r = run({"pencil", "hurwitz", data("torus_ab.json"), "--braid", "s1"});
  CHECK(r.code == 0);
  CHECK(r.doc()["pencil"]["cycles"] == json::parse("[[0,1],[1,-1]]"));
  CHECK(r.doc()["total_monodromy_preserved"] == true);
  CHECK(run({"pencil", "hurwitz", data("torus_ab.json"), "--braid", "s2"}).code == 2);
  CHECK(run({"pencil", "hurwitz", data("torus_ab.json"), "--braid", "t1"}).code == 2);
}

TEST_CASE("pencil matching") {
  const Run r = run({"pencil", "matching", data("torus_abab.json"), "--max-len", "1"});
  REQUIRE(r.code == 0);
  bool found = false;
  const json doc = r.doc();
  for (const auto& a : doc["arcs"]) {
    if (a["base"].get<int>() == 1 && a["carrier"].get<std::string>() == "S2") {
      found = true;
      CHECK(a["class"] == "Matching");
      CHECK(a["supporting_pair"] == json::parse(R"(["x1", "x1 x3 X1"])"));
    }
  }
  CHECK(found);
  CHECK(doc["matching"].get<int>() >= 2);

  const Run o = run({"pencil", "matching", data("torus_ab.json"), "--max-len", "0"});
  REQUIRE(o.code == 0);
  REQUIRE(o.doc()["arcs"].size() == 1);
  CHECK(o.doc()["arcs"][0]["class"] == "OnceIntersecting");

  const Run e = run({"pencil", "matching", data("torus_single.json"), "--max-len", "0"});
  CHECK(e.code == 0);
  CHECK(e.doc()["arcs"].empty());

  const Run s = run({"pencil", "matching", data("sp_disjoint.json"), "--max-len", "0"});
  CHECK(s.doc()["arcs"][0]["class"] == "Other");
  const Run t = run({"pencil", "matching", data("sp_disjoint.json"), "--max-len", "0", "--trust-algebraic"});
  CHECK(t.doc()["arcs"][0]["class"] == "DisjointPair");

  CHECK(run({"pencil", "matching", data("torus_ab.json"), "--max-len", "-1"}).code == 2);
}

TEST_CASE("pencil gamma-check") {
  CHECK(run({"pencil", "gamma-check", data("torus_abab.json"), "--auto", data("auto_member.json")}).code == 0);
  const Run r = run({"pencil", "gamma-check", data("torus_ab.json"), "--auto", data("auto_nonmember.json")});
  CHECK(r.code == 1);
  CHECK(r.doc()["member"] == false);
  CHECK(r.doc().contains("lhs"));
  CHECK(r.doc().contains("rhs"));
  CHECK(run({"pencil", "gamma-check", data("torus_ab.json"), "--auto", data("auto_bad_dimension.json")}).code == 2);
}

TEST_CASE("verify cutoff") {
  const Run r = run({"verify", "cutoff", "--k", "10000", "--D", "1", "--c0", "1"});
  CHECK(r.code == 0);
  CHECK(r.doc()["eps"].get<double>() == doctest::Approx(0.099158).epsilon(1e-5));
  const Run t = run({"verify", "cutoff", "--k", "50", "--D", "1", "--c0", "1"});
  CHECK(t.code == 2);
  CHECK(t.doc()["min_k"].get<double>() == doctest::Approx(96.82).epsilon(1e-4));
}

TEST_CASE("verify deform and radial") {
  const Run d = run({"verify", "deform", "--k", "10000", "--D", "1"});
  CHECK(d.code == 0);
  CHECK(d.doc()["c0"] == 1.0);
  CHECK(run({"verify", "deform", "--k", "10000", "--D", "1", "--c0", "4"}).code == 2);
  CHECK(run({"verify", "deform", "--k", "10000", "--D", "1", "--n", "0"}).code == 2);
  const Run r = run({"verify", "radial", "--samples", "200", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.doc()["bounds_hold"] == true);
  CHECK(run({"verify", "radial", "--samples", "0"}).code == 2);
}

TEST_CASE("verify localtrans") {
  const Run r = run({"verify", "localtrans", "--seed", "1", "--trials", "3"});
  CHECK(r.code == 0);
  const json doc = r.doc();
  for (const auto& t : doc["results"]) CHECK(t.contains("certificate"));
  CHECK(run({"verify", "localtrans", "--seed", "1", "--trials", "3", "--delta", "0.7"}).code == 2);
}

TEST_CASE("determinism and --out") {
  const std::vector<std::string> args{"verify", "localtrans", "--seed", "5", "--trials", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> m{"pencil", "matching", data("torus_abab.json"), "--max-len", "2"};
  CHECK(run(m).out == run(m).out);

  const std::string path = std::string(LPM_TEST_BINARY_DIR) + "/cli_out.json";
  std::remove(path.c_str());
  const Run f = run({"verify", "radial", "--samples", "10", "--out", path});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"verify", "radial", "--samples", "10"}).out);
}
