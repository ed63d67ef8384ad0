#include <doctest.h>

#include <json.hpp>

#include "punctual/cli.hpp"

using punctual::cli::run_command;

TEST_CASE("text output of the main subcommands") {
    auto pd = run_command({"pd", "--d", "4"});
    CHECK(pd.code == 0);
    CHECK(pd.out == "1 + L^2*t - L^2*t^2\n");

    auto hilb = run_command({"hilb", "--d", "6", "--n", "3"});
    CHECK(hilb.code == 0);
    CHECK(hilb.out ==
          "L^10 + 3*L^9 + 7*L^8 + 9*L^7 + 9*L^6 + 7*L^5 + 5*L^4 + 3*L^3 + 2*L^2 + L + 1\n");

    auto parts = run_command({"partitions", "--n", "3", "--d", "6"});
    CHECK(parts.code == 0);
    CHECK(parts.out == "48\n");

    auto stab = run_command({"stab", "--d", "4", "--n", "8"});
    CHECK(stab.out == "true\n");

    auto gauss = run_command({"gauss", "--k", "2", "--n", "4", "--format", "latex"});
    CHECK(gauss.out ==
          "\\mathbb{L}^{4} + \\mathbb{L}^{3} + 2\\mathbb{L}^{2} + \\mathbb{L} + 1\n");
}

TEST_CASE("json output carries the envelope") {
    auto res = run_command({"gauss", "--k", "1", "--n", "3", "--format", "json"});
    REQUIRE(res.code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["format_version"] == "1");
    CHECK(doc["command"] == "gauss");
    CHECK(doc["parameters"]["k"] == 1);
    CHECK(doc["result"]["type"] == "lpoly");
    auto value = doc["result"]["value"];
    REQUIRE(value.size() == 3);
    CHECK(value[0][0] == 2);
    CHECK(value[0][1] == "1");

    auto zd = run_command({"zd", "--d", "2", "--order", "3", "--format", "json"});
    auto zdoc = nlohmann::json::parse(zd.out);
    CHECK(zdoc["result"]["order"] == 3);
    CHECK(zdoc["result"]["coeffs"].size() == 4);
}

TEST_CASE("exit codes") {
    auto boundary = run_command({"hilb", "--d", "9", "--n", "3"});
    CHECK(boundary.code == 3);
    CHECK(boundary.err.find("UnknownStratum") != std::string::npos);

    auto quot = run_command({"quot", "--d", "7", "--n", "2", "--r", "2"});
    CHECK(quot.code == 3);
    CHECK(quot.err.find("OutOfRange") != std::string::npos);

    auto usage = run_command({"hilb", "--d", "4"});
    CHECK(usage.code == 2);

    auto unknown = run_command({"frobnicate"});
    CHECK(unknown.code == 2);

    auto budget = run_command({"partitions", "--n", "4", "--d", "8", "--budget", "5"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("ResourceLimit") != std::string::npos);
}

TEST_CASE("repeat invocations are byte-identical") {
    for (const auto& argv : std::vector<std::vector<std::string>>{
             {"qd", "--d", "6", "--format", "json"},
             {"omega", "--d", "5", "--n", "3"},
             {"verify", "--module", "lpoly"}}) {
        auto a = run_command(argv);
        auto b = run_command(argv);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("verify subcommand") {
    auto ok = run_command({"verify", "--module", "lpoly"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    auto cli_checks = run_command({"verify", "--module", "cli"});
    CHECK(cli_checks.code == 0);
    auto bogus = run_command({"verify", "--module", "nonsense"});
    CHECK(bogus.code == 3);
}
