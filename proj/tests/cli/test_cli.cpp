#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"

using namespace fgv::cli;
using nlohmann::json;

namespace {
const std::string fixtures = FGV_FIXTURES;

ProblemSpec fixture(const std::string& name) { return load_spec(fixtures + "/" + name + ".json"); }

int run(const std::string& args) {
  const int status = std::system((std::string(FGV_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("problem specs") {
  const ProblemSpec s = fixture("example1");
  CHECK(s.name == "example1");
  CHECK(s.max_order == 8);
  REQUIRE(s.poly_omega);
  CHECK(s.poly_omega->p == fgv::BivarPoly::y() * fgv::BivarPoly::y());
  CHECK(s.t_samples == std::vector<double>{0.5, 1.0});

  const ProblemSpec rational = fixture("example3-oracle");
  CHECK_FALSE(rational.poly_omega);
  CHECK_THROWS_AS(rational.polynomial_omega(), InvalidInput);

  CHECK_THROWS_AS(spec_from_texts("x^2 + 2y^2", "y", "0"), InvalidInput);
  CHECK_THROWS_AS(spec_from_texts("x^2 + y^2", "y^", "0"), InvalidInput);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"max_order": 0})")), InvalidInput);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"omega": {"dx": 3}})")), InvalidInput);
  CHECK_THROWS_AS(spec_from_json(json::parse("[1]")), InvalidInput);
  CHECK_THROWS_AS(load_spec(fixtures + "/missing.json"), InvalidInput);

  CHECK(parse_real_list("0.25, 0.5") == std::vector<double>{0.25, 0.5});
  CHECK(parse_real_list("").empty());
  CHECK_THROWS_AS(parse_real_list("1,x"), InvalidInput);
}

TEST_CASE("melnikov command") {
  SUBCASE("example1") {
    const auto r = cmd_melnikov(fixture("example1"));
    CHECK(r.exit_code == kSuccess);
    CHECK(r.report["first_nonzero"].is_null());
    CHECK(r.report["pairs"].size() == 8);
    CHECK(r.report["pairs"][0]["g"] == "-x");
    CHECK(r.report["pairs"][3]["g"] == "1/24x^4");
    CHECK(r.report["pairs"][0]["r"] == "2/3x^3 + x y^2");
    CHECK(r.report["gv_pairs"][1]["R"] == "1/2x^4 + x^2 y^2");
  }
  SUBCASE("y dx") {
    const auto r = cmd_melnikov(spec_from_texts("x^2 + y^2", "y", "0"));
    CHECK(r.report["first_nonzero"] == 1);
    CHECK(r.report["melnikov"] == json::array({"π·t"}));
    CHECK(r.report["pairs"].empty());
  }
  SUBCASE("empty form") {
    const auto r = cmd_melnikov(spec_from_texts("x^2 + y^2", "0", "0"), 4);
    CHECK(r.report["melnikov"] == json::array({"0", "0", "0", "0"}));
    CHECK(r.report["length"] == json({{"kind", "finite"}, {"value", 0}}));
    CHECK(r.report["first_integral"] == "x^2 + y^2");
  }
}

TEST_CASE("gv command") {
  SUBCASE("example1, k = 4") {
    const auto r = cmd_gv(fixture("example1"), 4);
    CHECK(r.exit_code == kSuccess);
    CHECK(r.report["defect_zero"] == json::array({true, true, true, true, true}));
    CHECK(r.report["readback_matches"] == true);
    CHECK(r.report["witness"]["closed_product"] == true);
    CHECK(r.report["first_integral"] ==
          "x^2 + y^2 + eps (2/3x^3 + x y^2) + eps^2 (1/4x^4 + 1/2x^2 y^2) + eps^3 (1/15x^5 + 1/6x^3 y^2) + "
          "eps^4 (1/72x^6 + 1/24x^4 y^2)");
    CHECK(r.report["classical_gv"]["relations_hold"] == json::array({true, true}));
  }
  SUBCASE("y dx obstructs at order 1") {
    const auto r = cmd_gv(spec_from_texts("x^2 + y^2", "y", "0"), 0);
    CHECK(r.exit_code == kObstruction);
    CHECK(r.report["obstruction"]["kind"] == "ObstructionAtOrder");
    CHECK(r.report["obstruction"]["order"] == 1);
    CHECK(r.report["obstruction"]["witness"] == "π·t");
  }
  SUBCASE("w = 0") {
    const auto r = cmd_gv(spec_from_texts("x^2 + y^2", "0", "0"), 3);
    CHECK(r.exit_code == kSuccess);
    CHECK(r.report["first_integral"] == "x^2 + y^2");
    CHECK(r.report["integrating_factor"] == "1");
  }
}

TEST_CASE("oracle command") {
  SUBCASE("example1") {
    const auto r = cmd_oracle(fixture("example1"));
    CHECK(r.exit_code == kSuccess);
    CHECK(r.report["max_abs_delta"].get<double>() < 1e-8);
    CHECK(r.samples.size() == 4);
    CHECK(r.report["cross_check"]["agree"] == true);
  }
  SUBCASE("y dx") {
    OracleOptions opts;
    opts.t = std::vector<double>{1.0};
    opts.eps = std::vector<double>{1e-3};
    const auto r = cmd_oracle(spec_from_texts("x^2 + y^2", "y", "0"), opts);
    const double m1 = r.report["melnikov_estimates"][0]["coefficients"][0].get<double>();
    CHECK(m1 == doctest::Approx(3.141592653589793).epsilon(1e-6));
  }
  SUBCASE("empty eps grid") {
    OracleOptions opts;
    opts.eps = std::vector<double>{};
    const auto r = guarded([&] { return cmd_oracle(fixture("example1"), opts); });
    CHECK(r.exit_code == kInvalidInput);
  }
}

TEST_CASE("reports are deterministic") {
  CHECK(cmd_gv(fixture("example1"), 3).report.dump() == cmd_gv(fixture("example1"), 3).report.dump());
  CHECK(cmd_oracle(fixture("nonzero-m1")).report.dump() == cmd_oracle(fixture("nonzero-m1")).report.dump());
}

TEST_CASE("verify-all") {
  const auto r = cmd_verify_all(fixtures);
  CHECK(r.exit_code == kSuccess);
  CHECK(r.report["fixtures"].size() == 4);
  CHECK(r.summary.find("FAIL") == std::string::npos);
}

TEST_CASE("binary exit codes and outputs") {
  const auto dir = std::filesystem::temp_directory_path() / "fgv_cli_test";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string(), csv = (dir / "s.csv").string();

  CHECK(run("melnikov " + fixtures + "/example1.json") == 0);
  CHECK(run("gv --dx y --k 0") == 1);
  CHECK(run("melnikov --F 'x^2 + 2y^2' --dx y") == 2);
  CHECK(run("melnikov --dx 'y^'") == 2);
  CHECK(run("oracle " + fixtures + "/example1.json --eps ''") == 2);
  CHECK(run("--verify-all --fixtures " + fixtures) == 0);

  CHECK(run("gv " + fixtures + "/example2.json --k 3 --json " + a) == 0);
  CHECK(run("gv " + fixtures + "/example2.json --k 3 --json " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(json::parse(slurp(a))["command"] == "gv");

  CHECK(run("oracle " + fixtures + "/nonzero-m1.json --csv " + csv + " --json " + a) == 0);
  CHECK(slurp(csv).rfind("t,eps,delta,est_error\n1,0.001,", 0) == 0);
  std::filesystem::remove_all(dir);
}
