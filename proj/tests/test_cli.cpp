#include "jm/cli.hpp"
#include "jm/moments_asymptotic.hpp"
#include "jm/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace jm;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run_args(std::vector<std::string> args)
{
    args.insert(args.begin(), "jmoments");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("complex-m emits ascending coefficient lists")
{
    const Outcome o = run_args({"complex-m", "--r", "2", "--format", "json"});
    REQUIRE(o.status == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["command"] == "complex-m");
    REQUIRE(j["moments"].size() == 2);
    CHECK(j["moments"][1]["Y"] == Json::array({"-1", "0", "1"}));
    CHECK(j["moments"][1]["X"] == Json::array({"-2", "0", "1"}));
    CHECK(polynomial_from_json(j["moments"][1]["Y"]) == asymptotic_moment(2).Y);
}

TEST_CASE("abs-v text output")
{
    const Outcome o = run_args({"abs-v", "--h", "2", "--format", "text"});
    REQUIRE(o.status == 0);
    CHECK(o.out.find("constant    = 3/16") != std::string::npos);
    CHECK(o.out.find("numerator   = 1\n") != std::string::npos);
    CHECK(o.out.find("denominator = (u^2 - 1)*(u^2 - 9)") != std::string::npos);
    const Outcome zero = run_args({"abs-m", "--h", "0", "--format", "json"});
    REQUIRE(zero.status == 0);
    CHECK(Json::parse(zero.out)["moments"][0]["h"] == 0);
}

TEST_CASE("finite-n and csv")
{
    const Outcome o = run_args({"finite-n", "--N", "2", "--k", "1", "--rmax", "2", "--format", "csv"});
    REQUIRE(o.status == 0);
    CHECK(o.out == "N,k,r,factor,m_num,m_den\n2,1,0,1,3,1\n2,1,1,-i,3,1\n2,1,2,-1,1,1\n");
    const Outcome j = run_args({"finite-n", "--N", "3", "--k", "2", "--rmax", "4"});
    REQUIRE(j.status == 0);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["entries"].size() == 5);
    CHECK(rational_from_json(parsed["entries"][0]["m"]) == 50);
}

TEST_CASE("figure-data schema")
{
    const Outcome o = run_args({"figure-data", "--h", "4", "--digits", "12", "--format", "csv"});
    REQUIRE(o.status == 0);
    CHECK(o.out.rfind("h,root,log_diff\n", 0) == 0);
    CHECK(o.out.find("3,3.00000000000,0.69315\n") != std::string::npos);
    CHECK(o.out.find("4,5.74456264654,0.22748\n") != std::string::npos);
}

TEST_CASE("roots report")
{
    const Outcome o = run_args({"roots", "--h", "4", "--digits", "25"});
    REQUIRE(o.status == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["digits"] == 25);
    CHECK(j["reports"][3]["largest"]["value"] == "5.744562646538028659850611");
    CHECK(j["reports"][3]["largest"]["error_bound"] == "1e-24");
    CHECK(j["reports"][0]["real_root_count"] == 0);
}

TEST_CASE("JSON output round-trips")
{
    for (const auto& args : std::vector<std::vector<std::string>>{{"complex-m", "--r", "6"},
                                                                   {"abs-m", "--h", "3"},
                                                                   {"roots", "--h", "5", "--digits", "20"},
                                                                   {"finite-n", "--N", "2", "--k", "2", "--rmax", "4"}}) {
        const Outcome o = run_args(args);
        REQUIRE(o.status == 0);
        CHECK(Json::parse(o.out).dump(2) + "\n" == o.out);
    }
    const Rational q = make_rational(-123456789, 1000000007);
    CHECK(rational_from_json(to_json(q)) == q);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", 1}, {"den", "2"}}), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), std::domain_error);
    CHECK_THROWS_AS(polynomial_from_json(Json::array({"1", "x"})), std::invalid_argument);
    CHECK(csv_row({"a", "b,c", "d\"e"}) == "a,\"b,c\",\"d\"\"e\"\n");
}

TEST_CASE("repeated runs are byte-identical")
{
    const Outcome a = run_args({"abs-v", "--h", "7", "--format", "csv"});
    const Outcome b = run_args({"abs-v", "--h", "7", "--format", "csv"});
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors produce a JSON record and status 2")
{
    const std::vector<std::vector<std::string>> bad = {{},
                                                       {"nonsense"},
                                                       {"complex-m"},
                                                       {"complex-m", "--r", "-1"},
                                                       {"finite-n", "--N", "2", "--k", "1", "--rmax", "3"},
                                                       {"finite-n", "--N", "0", "--k", "1", "--rmax", "1"},
                                                       {"roots", "--h", "0"},
                                                       {"roots", "--h", "3", "--digits", "0"},
                                                       {"abs-v", "--h", "2", "--format", "xml"},
                                                       {"verify", "--suite", "medium"}};
    for (const auto& args : bad) {
        const Outcome o = run_args(args);
        CHECK(o.status == 2);
        CHECK(o.out.empty());
        const Json e = Json::parse(o.err);
        CHECK(e["error"]["type"] == "usage");
        CHECK(e["error"]["message"].is_string());
    }
}

TEST_CASE("output file")
{
    const std::string path = "test_cli_output.json";
    const Outcome o = run_args({"abs-m", "--h", "2", "--output", path});
    REQUIRE(o.status == 0);
    CHECK(o.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j["moments"][1]["numerator"] == Json::array({"-6", "0", "-8", "0", "1"}));
    std::remove(path.c_str());
    const Outcome bad = run_args({"abs-m", "--h", "1", "--output", "/nonexistent-dir/x.json"});
    CHECK(bad.status == 1);
    CHECK(Json::parse(bad.err)["error"]["type"] == "io");
}

TEST_CASE("help")
{
    const Outcome o = run_args({"--help"});
    CHECK(o.status == 0);
    CHECK(o.out.find("complex-m") != std::string::npos);
}
