#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/cli.hpp"

using namespace curvlab::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

// CSV body without the leading "# ..." metadata lines.
std::vector<std::string> csv_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line.front() != '#')
            lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> fields;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');)
        fields.push_back(f);
    return fields;
}

} // namespace

TEST_CASE("eigen command")
{
    const auto flat = invoke({"eigen", "--K", "0", "--r0", "1", "--n", "1"});
    CHECK(flat.code == kSuccess);
    const auto lines = csv_lines(flat.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "K,r0,n,lambda,lambda_numeric,rel_discrepancy,norm_integral,boundary_residual,iterations,"
                      "interior_zeros");
    const auto row = split(lines[1]);
    CHECK(row[3] == "9.86960440109");
    CHECK(std::stod(row[5]) < 1e-8);

    CHECK(invoke({"eigen", "--K", "1", "--r0", "3.2"}).code == kUsageError);

    const auto hyper = invoke({"eigen", "--K", "-1", "--r0", "pi", "--n", "2", "--format", "json"});
    CHECK(hyper.code == kSuccess);
    const auto doc = nlohmann::json::parse(hyper.out);
    CHECK(doc["rows"][0]["lambda"].get<double>() == doctest::Approx(5.0));
    CHECK(doc["rows"][0]["rel_discrepancy"].get<double>() < 1e-8);
    CHECK(doc["metadata"]["tool"] == "curvlab");
    CHECK(doc["metadata"]["config"]["n"] == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(invoke({}).code == kUsageError);
    CHECK(invoke({"frobnicate"}).code == kUsageError);
    CHECK(invoke({"eigen", "--r0", "1"}).code == kUsageError);
    CHECK(invoke({"eigen", "--K", "0", "--r0", "1", "--n", "0"}).code == kUsageError);
    CHECK(invoke({"eigen", "--K", "0", "--r0", "abc"}).code == kUsageError);
    CHECK(invoke({"eigen", "--K", "0", "--r0", "-1"}).code == kUsageError);
    CHECK(invoke({"bound", "--K", "1", "--r-min", "3.2", "--r-max", "4"}).code == kUsageError);
    CHECK(invoke({"bound", "--K", "0", "--r", "1", "--steps", "4"}).code == kUsageError);
    CHECK(invoke({"trial", "--K", "0", "--r0", "1"}).code == kUsageError);
    CHECK(invoke({"schwarzschild", "--rs", "0"}).code == kUsageError);
    CHECK(invoke({"schwarzschild", "--rs", "-2"}).code == kUsageError);
    CHECK(invoke({"volume", "--K", "1", "--r", "4"}).code == kUsageError);
    CHECK(invoke({"eigen", "--K", "0", "--r0", "1", "--format", "xml"}).code == kUsageError);
    CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("numerical failure exits with 1")
{
    // an unattainable tolerance makes the oracle comparison fail
    const auto r = invoke({"eigen", "--K", "0", "--r0", "1", "--tolerance", "1e-30"});
    CHECK(r.code == kNumericalFailure);
}

TEST_CASE("bound command reproduces the figure data")
{
    const auto r = invoke({"bound", "--K", "1,0,-1", "--r-min", "0.05", "--r-max", "pi", "--steps", "200"});
    CHECK(r.code == kSuccess);
    const auto lines = csv_lines(r.out);
    CHECK(lines[0] == "K,r,sigma_p_min,product");
    CHECK(lines.size() == 1 + 199 + 200 + 200);
    CHECK(r.out.find("\"asymptote\":1.0") != std::string::npos);

    const auto point = invoke({"bound", "--K", "0", "--r", "pi"});
    CHECK(csv_lines(point.out)[1] == "0,3.14159265359,1,3.14159265359");

    const auto json = invoke({"bound", "--K", "-1", "--r", "20", "--format", "json"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["rows"][0]["sigma_p_min"].get<double>() == doctest::Approx(1.0123).epsilon(1e-4));
    CHECK(doc["metadata"]["curves"][0]["asymptote"].get<double>() == 1.0);

    const auto si = invoke({"bound", "--K", "0", "--r", "1", "--units", "si"});
    CHECK(std::stod(split(csv_lines(si.out)[1])[2]) == doctest::Approx(std::numbers::pi * 1.054571817e-34));
}

TEST_CASE("determinism: identical configs give identical bytes")
{
    const std::vector<std::vector<std::string>> commands{
        {"bound", "--K", "1,0,-1", "--steps", "50"},
        {"trial", "--K", "-1", "--r0", "2", "--seed", "42", "--degree", "6"},
        {"eigen", "--K", "4", "--r0", "0.9", "--n", "3", "--format", "json"},
        {"verify", "--trials", "20"},
        {"sweep", "--K", "0,-1", "--r0", "1,2", "--n-max", "2"},
    };
    for (const auto& args : commands) {
        const auto first = invoke(args);
        const auto second = invoke(args);
        CHECK(first.code == kSuccess);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("trial command")
{
    const auto r = invoke({"trial", "--K", "-1", "--r0", "2", "--seed", "3", "--format", "json"});
    CHECK(r.code == kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"][0]["ratio"].get<double>() >= 1.0);
    CHECK(doc["metadata"]["coefficients"].size() == 5);
    CHECK(doc["rows"][0]["sigma_p"].get<double>() >= doc["rows"][0]["sigma_p_min"].get<double>());
}

TEST_CASE("volume command")
{
    const auto r = invoke({"volume", "--K", "1", "--r", "pi", "--format", "json"});
    CHECK(r.code == kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"][0]["ball_volume"].get<double>() == doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
    CHECK(doc["rows"][0]["rel_discrepancy"].get<double>() < 1e-12);
}

TEST_CASE("schwarzschild command")
{
    const auto natural = invoke({"schwarzschild", "--format", "json"});
    CHECK(natural.code == kSuccess);
    const auto doc = nlohmann::json::parse(natural.out);
    CHECK(doc["rows"][0]["min_schwarzschild_radius"].get<double>() == 2.0);
    CHECK(doc["rows"][0]["sigma_p_min"].get<double>() == 2.0);
    CHECK(doc["rows"][0]["geodesic_radius_numeric"].get<double>() == doctest::Approx(1.5708).epsilon(1e-4));
    CHECK(doc["rows"][0]["rel_discrepancy"].get<double>() < 1e-6);

    const auto si = invoke({"schwarzschild", "--units", "si", "--format", "json"});
    const auto sdoc = nlohmann::json::parse(si.out);
    CHECK(sdoc["rows"][0]["min_schwarzschild_radius"].get<double>() == doctest::Approx(3.23e-35).epsilon(1e-3));
}

TEST_CASE("verify command")
{
    const auto r = invoke({"verify", "--tolerance", "1e-8", "--seed", "42", "--trials", "200", "--format", "json"});
    CHECK(r.code == kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["metadata"]["all_passed"] == true);
    bool saw_reilly = false;
    for (const auto& row : doc["rows"]) {
        CHECK(row["passed"] == true);
        if (row["check"] == "variational")
            CHECK(row["worst"].get<double>() >= 1.0 - 1e-9);
        if (row["check"] == "reilly") {
            saw_reilly = true;
            CHECK(row["worst"].get<double>() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        }
    }
    CHECK(saw_reilly);
}

TEST_CASE("sweep command and output file")
{
    const std::string path = "curvlab_sweep_test.csv";
    const auto r = invoke({"sweep", "--K", "1", "--n-max", "2", "-o", path});
    CHECK(r.code == kSuccess);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(csv_lines(text).size() == 1 + 5 * 2);
    std::remove(path.c_str());

    CHECK(invoke({"sweep", "--K", "0", "-o", "/nonexistent-dir/x.csv"}).code == kUsageError);
}
