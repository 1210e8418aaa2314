#include <set>
#include <sstream>

#include "commands.hpp"
#include "io.hpp"
#include "support.hpp"

using namespace qschubert;
using qschubert::cli::RunConfig;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(RunConfig cfg) {
  cfg.data_dir = QSCHUBERT_TEST_DATA;
  std::ostringstream out, err;
  int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& command, const std::string& type, const std::string& word) {
  RunConfig c;
  c.command = command;
  c.type = type;
  c.word = word;
  return c;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scalar text round trip") {
  for (const Rat& x : {Rat(vpow(2) - vpow(-1, 3)), Rat(0L), Rat(vpow(1, -1)),
                       rat(vpow(3) + 1, vpow(4) - 1), rat(Laurent(-7L), vpow(2) + 3)})
    CHECK(cli::parse_rat(x.str()) == x);
  CHECK(cli::parse_laurent("v^-2 - 3*v + 4") == vpow(-2) - vpow(1, 3) + 4);
  CHECK(error_of([] { cli::parse_laurent("v^"); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { cli::parse_laurent("w"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("roots") {
  Run r = run(config("roots", "A2", "1,2,1"));
  CHECK(r.code == 0);
  CHECK(r.out.find("X1  degree a1") != std::string::npos);
  CHECK(r.out.find("X2  degree a1+a2") != std::string::npos);
  CHECK(r.out.find("X3  degree a2") != std::string::npos);
}

TEST_CASE("relations of the quantum matrix cell") {
  RunConfig c = config("relations", "A3", "2,1,3,2");
  c.format = "json";
  Run r = run(c);
  REQUIRE(r.code == 0);
  auto j = cli::json::parse(r.out);
  bool found = false;
  for (const auto& rel : j["relations"])
    if (rel["k"] == 1 && rel["l"] == 4) {
      found = true;
      CHECK(rel["s"] == 0);
      CHECK(rel["rhs"].size() == 1);
      CHECK(rel["rhs"][0]["a"] == cli::json::array({0, 1, 1, 0}));
      CHECK(rel["rhs"][0]["coeff"] == "1");
    }
  CHECK(found);
}

TEST_CASE("C2 basis carries the expected string names") {
  RunConfig c = config("basis", "C2", "2,1,2,1");
  c.degree_bound = 4;
  c.format = "json";
  Run r = run(c);
  REQUIRE(r.code == 0);
  std::set<std::string> labels;
  const auto doc = cli::json::parse(r.out);
  for (const auto& s : doc["slices"])
    for (const auto& e : s["elements"]) labels.insert(e["label"].get<std::string>());
  for (const char* l : {"E_{12}", "E_{1^2 2}", "E_{21}", "E_{2 1^2}", "E_{121}", "E_{2 1^2 2}"})
    CHECK(labels.count(l) == 1);
  // byte-identical reruns
  CHECK(run(c).out == r.out);
}

TEST_CASE("JSON elements round trip") {
  RunConfig c = config("basis", "A3", "2,1,3,2");
  c.degree = "1,2,1";
  c.format = "json";
  Run r = run(c);
  REQUIRE(r.code == 0);
  Algebra alg(RootDatum::preset("A3"));
  FrameCache fc(alg);
  const PBWFrame& f = fc.frame({1, 0, 2, 1});
  auto solved = lusztig_solve(f, {1, 2, 1});
  auto els = cli::json::parse(r.out)["slices"][0]["elements"];
  REQUIRE(els.size() == solved.size());
  for (std::size_t j = 0; j < els.size(); ++j) {
    Element x = cli::element_from_json(fc, els[j]);
    CHECK(x == solved[j].element);
    auto copy = els[j];
    if (copy.contains("terms")) {
      copy.erase("pbw");
      CHECK(cli::element_from_json(fc, copy) == solved[j].element);
    }
  }
}

TEST_CASE("expand") {
  RunConfig c = config("expand", "A2", "1,2,1");
  c.element = "E1*E2";
  Run r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out == "v*X^(1,0,1)\n");
  RunConfig d = config("expand", "A2", "1");
  d.element = "E2";
  CHECK(run(d).code == 1);
  RunConfig e = config("expand", "A3", "2,1,3,2");
  e.element = "E2132";
  Run re = run(e);
  CHECK(re.code == 0);
  CHECK(re.out == "-v^-2*X^(0,1,1,0) + X^(1,0,0,1)\n");
}

TEST_CASE("strings") {
  RunConfig c = config("strings", "A3", "");
  c.element = "E2*E213 - v^-2 E21*E23";
  Run r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out == "E_{2132}\n");
}

TEST_CASE("verify, compare, embed") {
  RunConfig v = config("verify", "A2", "1,2,1");
  v.degree_bound = 4;
  v.check_level = "full";
  Run rv = run(v);
  CHECK(rv.code == 0);
  CHECK(rv.out.find("FAIL") == std::string::npos);

  RunConfig c = config("compare", "B2", "1,2,1,2");
  c.word2 = "2,1,2,1";
  c.degree_bound = 3;
  CHECK(run(c).code == 0);

  RunConfig e = config("embed", "A3", "2");
  e.word2 = "1,3,2";
  e.degree_bound = 3;
  CHECK(run(e).code == 0);

  RunConfig b = config("bischubert", "A2", "1,2,1");
  b.word2 = "1,2,1";
  b.degree_bound = 2;
  CHECK(run(b).code == 0);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run(config("roots", "A2", "1,1")).code == 2);
  CHECK(run(config("roots", "Z5", "1")).code == 2);
  CHECK(run(config("roots", "", "1")).code == 2);
  CHECK(run(config("nonsense", "A2", "1")).code == 2);
  RunConfig c = config("compare", "A2", "1,2");
  c.word2 = "2,1";
  CHECK(run(c).code == 2);
  RunConfig e = config("embed", "A2", "1");
  e.word2 = "1,2";
  CHECK(run(e).code == 2);
  RunConfig m = config("basis", "A3", "");
  m.max_words = 10;
  m.degree = "2,2,2";
  CHECK(run(m).code == 2);
  RunConfig d = config("basis", "A2", "1,2,1");
  d.degree = "1,-1";
  CHECK(run(d).code == 2);
}

}  // TEST_SUITE
