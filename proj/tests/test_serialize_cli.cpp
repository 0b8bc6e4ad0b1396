#include "support.hpp"

#include "waring/cli.hpp"
#include "waring/parse.hpp"
#include "waring/serialize.hpp"
#include "waring/type_c.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace waring;
using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("waring_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("rationals serialize as strings") {
  CHECK(to_json(Rational(-7, 3)) == "-7/3");
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(Json("x")), FormatError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), FormatError);
}

TEST_CASE("decompositions round trip through JSON") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const WaringDecomposition d = decompose_type_c_normal(n);
    const Json j = to_json(d);
    const WaringDecomposition back = decomposition_from_json(Json::parse(j.dump()));
    CHECK(back.size() == d.size());
    CHECK(back.expand() == d.expand());
    CHECK(to_json(back) == j);
  }
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"degree":3})")), FormatError);
  CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"degree":3,"nvars":2,"terms":[{"coefficient":"1","form":["1"]}]})")),
                  FormatError);
}

TEST_CASE("ideals and matrices round trip") {
  const HomogeneousIdeal i = apolar_ideal(parse_polynomial("x0^2*x1 + x0*x2^2", 3));
  const HomogeneousIdeal back = ideal_from_json(Json::parse(to_json(i).dump()));
  CHECK(same_ideal_up_to(i, back, 4));
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = Rational(1, 2);
  m(1, 1) = -3;
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(matrix_from_json(Json::parse(R"({"matrix":[["1","1/2"],["0","-3"]]})")) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"]])")), FormatError);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"analyze", "x0", "x0*x1 + x2^2"}).code == cli::Success);
  CHECK(run_cli({"--help"}).code == cli::Success);
  CHECK(run_cli({}).code == cli::InputError);
  CHECK(run_cli({"analyze", "x0", "x0*x1 +"}).code == cli::InputError);
  CHECK(run_cli({"analyze", "x0", "x0*x1 +"}).err.find("parse error") != std::string::npos);
  CHECK(run_cli({"analyze", "x0^2", "x1^2"}).code == cli::InputError);
  CHECK(run_cli({"decompose", "x0", "x0*x1 + x2^2 + 2*x3^2"}).code == cli::FieldExtension);
  CHECK(run_cli({"decompose", "x0", "x0*x1 + x2^2 + 2*x3^2", "--weighted"}).code == cli::Success);
  CHECK(run_cli({"hilbert", "x0^3 + x1^3"}).code == cli::Success);
  CHECK(run_cli({"certify", "--segre-example"}).code == cli::Success);
}

TEST_CASE("decompose then verify through files") {
  const Run dec = run_cli({"decompose", "--normal-form", "3", "--json"});
  REQUIRE(dec.code == 0);
  const auto good = temp_file("good.json", dec.out);
  const std::string f = type_c_normal_form(3).to_string();
  const Run ok = run_cli({"verify", f, good.string()});
  CHECK(ok.code == cli::Success);
  CHECK(run_cli({"verify", f, good.string(), "--json"}).out.find("\"ok\": true") != std::string::npos);

  Json j = Json::parse(dec.out);
  j["terms"].erase(j["terms"].begin());
  const auto bad = temp_file("bad.json", j.dump());
  CHECK(run_cli({"verify", f, bad.string()}).code == cli::VerificationFailed);
  CHECK(run_cli({"verify", "x7^3", good.string()}).code == cli::InputError);
  CHECK(run_cli({"verify", f, "/nonexistent/file.json"}).code == cli::InputError);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("decompose with a supplied change of coordinates") {
  std::mt19937 rng(31);
  const LinearChange a = random_change(rng, 4, 2);
  const ReducibleCubic base = type_c_normal_cubic(3);
  const LinearChange back = a.inverse();
  const Polynomial l = substitute(base.linear().to_polynomial(), back), q = substitute(base.quadric(), back);
  const Polynomial f = l * q;
  Json m = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < 4; ++k) row.push_back(to_json(a.matrix()(i, k)));
    m.push_back(row);
  }
  const auto path = temp_file("change.json", m.dump());
  const Run dec = run_cli({"decompose", l.to_string(), q.to_string(), "--change",
                           path.string(), "--json"});
  REQUIRE(dec.code == 0);
  const WaringDecomposition d = decomposition_from_json(Json::parse(dec.out));
  CHECK(verify_decomposition(f, d).ok());
  CHECK(d.size() == 7);
  std::filesystem::remove(path);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"decompose", "--normal-form", "5", "--json"},
      {"analyze", "x0 + x1", "x0*x2 + x1^2 - x3^2", "--json"},
      {"certify", "x0^2*x1 + x0*x2^2", "--hyperplane", "d1", "--colon", "d2"},
      {"apolar", "x0^2*x1 + x0*x2^2"},
  };
  for (const auto& c : commands) {
    const Run a = run_cli(c), b = run_cli(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("json outputs parse") {
  const Run an = run_cli({"--json", "analyze", "x0", "x0*x1 + x2^2 + x3^2 - x4^2"});
  REQUIRE(an.code == 0);
  const Json j = Json::parse(an.out);
  CHECK(j["type"] == "C");
  CHECK(j["n"] == 4);
  CHECK(j["lower"]["value"] == 8);
  CHECK(j["upper"]["value"] == 9);
  const Json h = Json::parse(run_cli({"--json", "hilbert", "x0^2*x1 + x0*x2^2", "--plus", "d1"}).out);
  CHECK(h[1]["sum"] == 5);
  const Json cat = Json::parse(run_cli({"--json", "apolar", "x0^2*x1", "--catalecticant", "1"}).out);
  CHECK(cat["rank"] == 2);
}
