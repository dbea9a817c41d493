#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace chahn;
using namespace chahn::cli;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex literal round trip") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(parse_complex("0.5+1i") == Complex(0.5, 1.0));
  CHECK(parse_complex("0.5-2e-3i") == Complex(0.5, -2e-3));
  CHECK(parse_complex("-1e+2+3i") == Complex(-100.0, 3.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK_FALSE(parse_complex("").has_value());
  CHECK_FALSE(parse_complex("1+ii").has_value());
  CHECK_FALSE(parse_complex("abc").has_value());
  CHECK_FALSE(parse_complex("1,2").has_value());

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> e(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const Complex z(std::ldexp(u(rng), e(rng)), i % 3 == 0 ? 0.0 : std::ldexp(u(rng), e(rng)));
    const auto back = parse_complex(render_complex(z));
    REQUIRE(back.has_value());
    CHECK(back->real() == z.real());
    CHECK(back->imag() == z.imag());
    CHECK(std::signbit(back->imag()) == std::signbit(z.imag()));
  }
  const Complex nz(1.0, -0.0);
  CHECK(std::signbit(parse_complex(render_complex(nz))->imag()));
}

TEST_CASE("value JSON round trip") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-700.0, 700.0);
  for (int i = 0; i < 500; ++i) {
    const ScaledValue v = ScaledValue::from_log(Complex(u(rng) * 10.0, u(rng)));
    const Json j = Json::parse(value_json(v).dump());
    CHECK(value_from_json(j) == v);
  }
  CHECK(value_from_json(Json::parse(value_json(ScaledValue()).dump())) == ScaledValue());
  CHECK(decimal_string(ScaledValue(2.0)) == "2.000000e+00");
  CHECK(decimal_string(ScaledValue(-0.000123)) == "-1.230000e-04");
  CHECK(decimal_string(ScaledValue::from_log(Complex(1000.0 * std::log(10.0), 0.0))).substr(0, 5) == "1.000");
}

TEST_CASE("eval example") {
  const Result r = invoke({"eval", "--n", "1", "--x", "2", "--params", "0.5,0.5,0.5,0.5"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(value_from_json(j["monic"]).to_complex() == Complex(2.0));
  CHECK(j["monic"]["decimal"] == "2.000000e+00");
}

TEST_CASE("zeros example") {
  const Result r = invoke({"zeros", "--n", "20", "--params", "0.5,0.5,0.5,0.5", "--estimates-only", "--k", "1"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["estimates"].size() == 1);
  CHECK(j["estimates"][0]["x"].get<double>() == doctest::Approx(7.71064).epsilon(1e-4));
  CHECK_FALSE(j.contains("zeros"));

  const Result full = invoke({"zeros", "--n", "6"});
  REQUIRE(full.code == 0);
  CHECK(Json::parse(full.out)["zeros"].size() == 6);
}

TEST_CASE("validate orthogonality example") {
  const Result r = invoke({"validate", "orthogonality", "--max-n", "3", "--params", "0.5,0.5,0.5,0.5"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["rows"].size() == 10);
  for (const auto& row : j["rows"]) CHECK(row["rel_error"].get<double>() <= 1e-8);
}

TEST_CASE("approx methods") {
  auto method_of = [](std::vector<std::string> args) {
    const Result r = invoke(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out)["method"].get<std::string>();
  };
  CHECK(method_of({"approx", "--n", "100", "--t", "1"}) == "outer");
  CHECK(method_of({"approx", "--n", "100", "--t", "0.3"}) == "osc");
  CHECK(method_of({"approx", "--n", "100", "--t", "-0.3"}) == "osc");
  CHECK(method_of({"approx", "--n", "10000", "--t", "0.501"}) == "uniform");
  CHECK(method_of({"approx", "--n", "100", "--s", "0.5"}) == "plancherel");
  CHECK(method_of({"approx", "--n", "100", "--t", "0.4+0.2i"}) == "outer");
  CHECK(method_of({"approx", "--n", "50", "--t", "0.8", "--method", "uniform", "--side", "minus"}) == "uniform");
  const Result r = invoke({"approx", "--n", "100", "--t", "1", "--method", "outer"});
  CHECK(Json::parse(r.out)["rel_error"].get<double>() < 0.01);
}

TEST_CASE("exit codes") {
  Result r = invoke({"approx", "--n", "50", "--t", "0.01"});
  CHECK(r.code == 2);
  const Json e = Json::parse(r.err);
  CHECK(e["error"] == "TooCloseToOrigin");
  CHECK(r.err.find('\n') == r.err.size() - 1);

  CHECK(invoke({"eval", "--n", "2", "--x", "1", "--params", "-1,1,1,1"}).code == 2);
  CHECK(invoke({"approx", "--n", "50", "--t", "0.3", "--method", "outer"}).code == 2);
  CHECK(invoke({"eval", "--n", "2", "--x", "1+ii"}).code == 3);
  CHECK(invoke({"eval", "--x", "1"}).code == 3);
  CHECK(invoke({"frobnicate"}).code == 3);
  CHECK(invoke({"eval", "--n", "2", "--x", "1", "--params", "1,1,1"}).code == 3);
  CHECK(invoke({"approx", "--n", "5", "--t", "1", "--method", "nope"}).code == 3);
  CHECK(invoke({"eval", "--n", "2", "--x", "1", "--format", "xml"}).code == 3);
  CHECK(invoke({}).code == 3);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("CSV output carries a versioned header") {
  const Result r = invoke({"validate", "convergence", "--regime", "outer", "--t", "1", "--ns", "20,40", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# chahn-csv v1 convergence\n", 0) == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 4);
}

TEST_CASE("output file and determinism") {
  const std::string path = "cli_test_out.json";
  const std::vector<std::string> args = {"validate", "zero-accuracy", "--ns", "20,40", "--k", "2", "--out", path};
  REQUIRE(invoke(args).code == 0);
  std::ifstream f(path);
  std::stringstream first;
  first << f.rdbuf();
  f.close();
  REQUIRE(invoke(args).code == 0);
  std::ifstream g(path);
  std::stringstream second;
  second << g.rdbuf();
  CHECK(first.str() == second.str());
  CHECK(Json::parse(first.str())["rows"].size() == 4);
  std::remove(path.c_str());

  const std::vector<std::string> ev = {"eval", "--n", "300", "--x", "300"};
  CHECK(invoke(ev).out == invoke(ev).out);
}

TEST_CASE("eval reports values beyond double range exactly") {
  const Result r = invoke({"eval", "--n", "300", "--x", "300"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["monic"]["exp2"].get<std::int64_t>() > 1024);
  CHECK_FALSE(j.contains("p_n_oracle"));
}
