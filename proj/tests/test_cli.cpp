/*
   Copyright 2026 The hilbcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hilbcurve/cli.hpp"
#include "hilbcurve/json_io.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hilbcurve;
namespace hc = hilbcurve::cli;

namespace {

hc::CommandResult run(std::vector<std::string> args) { return hc::run(args); }

Json run_json(std::vector<std::string> args) {
    auto r = run(std::move(args));
    REQUIRE(r.exit_code == hc::exit_code::ok);
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("components command") {
    Json j = run_json({"components", "--n", "2", "--beta", "2"});
    CHECK(j["schema"] == kSchema);
    CHECK(j["components"] == Json::parse("[[[2]], [[1,1]]]"));
    CHECK(j["count"] == 2);
    CHECK(j["dim"] == 2);

    Json multi = run_json({"components", "--n", "2", "--branches", "1,2"});
    CHECK(multi["count"] == 4);
    CHECK(multi["components"][0] == Json::parse("[[1,1],[]]"));

    CHECK(run({"components", "--n", "2", "--beta", "2", "--branches", "1,2"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"components", "--n", "2"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"components", "--n", "2", "--branches", "1,x"}).exit_code == hc::exit_code::input_error);
}

TEST_CASE("membership command") {
    Json j = run_json({"membership", "--a", "x^2", "--b", "x", "--beta", "2"});
    CHECK(j["contains"] == true);
    CHECK(j["oracle_agrees"] == true);
    Json k = run_json({"membership", "--a", "x^2", "--b", "1", "--beta", "2", "--f", "y - 1"});
    CHECK(k["contains"] == false);
    CHECK(k["contains_f"] == true);

    auto bad = run({"membership", "--a", "2*x^2", "--b", "x", "--beta", "2"});
    CHECK(bad.exit_code == hc::exit_code::input_error);
    CHECK(bad.err.find("monic") != std::string::npos);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
    CHECK(run({"membership", "--a", "x^", "--b", "x", "--beta", "2"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"membership", "--a", "x^2", "--b", "y", "--beta", "2"}).exit_code == hc::exit_code::input_error);
}

TEST_CASE("stratum and profile commands") {
    Json j = run_json({"stratum", "--mults", "2,1", "--beta", "2", "--points", "1,-2"});
    CHECK(j["label"]["dim"] == 3);
    CHECK(j["label"]["case"] == "general");
    CHECK(j["ideal"]["a"] == Json::parse(R"(["2","-3","0","1"])"));
    CHECK(j["contains_power_y"] == true);

    Json s = run_json({"stratum", "--mults", "1,1", "--beta", "2", "--points", "0,1"});
    CHECK(s["label"]["case"] == "special");
    CHECK(s["ideal"]["b"] == Json::parse(R"(["0","0"])"));

    CHECK(run({"stratum", "--mults", "1,1", "--beta", "2", "--points", "1,1"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"stratum", "--mults", "0,1", "--beta", "2", "--points", "0,1"}).exit_code == hc::exit_code::input_error);

    Json p = run_json({"profile", "--a", "x^3 - 3*x + 2"});
    CHECK(p["profile"] == Json::parse("[2,1]"));
}

TEST_CASE("chart command") {
    Json j = run_json({"chart", "--mu", "2,1", "--zbeta", "2"});
    CHECK(j["variable_count"] == 9);
    CHECK(j["relations"].size() == 6);
    CHECK(j["zbeta"].is_object());

    auto warn = run({"chart", "--mu", "1,1,1", "--zbeta", "2"});
    CHECK(warn.exit_code == hc::exit_code::ok);
    CHECK(warn.err.find("rows") != std::string::npos);
    CHECK(run({"chart", "--mu", "1,2"}).exit_code == hc::exit_code::input_error);

    auto human = run({"chart", "--mu", "2", "--format", "human"});
    CHECK(human.exit_code == hc::exit_code::ok);
    CHECK(human.out.find("variable_count: 6") != std::string::npos);
    CHECK(human.out.find("relations: []") != std::string::npos);
}

TEST_CASE("verify-dims is reproducible") {
    std::vector<std::string> args{"verify-dims", "--n", "3", "--beta", "2", "--trials", "5", "--seed", "77"};
    auto a = run(args), b = run(args);
    CHECK(a.exit_code == hc::exit_code::ok);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    CHECK(j["report"]["pass"] == true);
    CHECK(j["report"]["seed"] == 77);

    auto other = run({"verify-dims", "--n", "3", "--beta", "2", "--trials", "5", "--seed", "78"});
    CHECK(other.out != a.out);

    // The default seed is taken from the caller.
    auto d1 = hc::run({"verify-dims", "--n", "2", "--beta", "2", "--trials", "2"}, 5);
    auto d2 = hc::run({"verify-dims", "--n", "2", "--beta", "2", "--trials", "2", "--seed", "5"});
    CHECK(d1.out == d2.out);
}

TEST_CASE("seed from the environment") {
    ::unsetenv("HILB_SEED");
    CHECK(hc::seed_from_environment() == hc::kDefaultSeed);
    ::setenv("HILB_SEED", "4242", 1);
    CHECK(hc::seed_from_environment() == 4242);
    ::setenv("HILB_SEED", "abc", 1);
    CHECK(hc::seed_from_environment() == hc::kDefaultSeed);
    ::unsetenv("HILB_SEED");
}

TEST_CASE("argument errors") {
    CHECK(run({}).exit_code == hc::exit_code::input_error);
    CHECK(run({"bogus"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"components", "--n", "2", "--beta", "2", "--frobnicate"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"components", "--n", "2", "--beta", "2", "--format", "xml"}).exit_code == hc::exit_code::input_error);
    CHECK(run({"--help"}).exit_code == hc::exit_code::ok);
}
