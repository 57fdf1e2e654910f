#include <doctest.h>

#include "orlov/report.hpp"

#include <fstream>
#include <sstream>

using namespace orlov;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json run_json(std::vector<std::string> args) {
    args.push_back("--no-timing");
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    auto j = nlohmann::ordered_json::parse(r.out);
    validate_report(j);
    return j;
}

}  // namespace

TEST_CASE("an-sing spectrum report") {
    const auto j = run_json({"an-sing-spectrum", "--n", "8"});
    CHECK(j["times"] == nlohmann::json::parse("[0,1,3]"));
    CHECK(j["gaps"] == nlohmann::json::parse("[[1,1]]"));
    CHECK(j["per_generator"].size() == 15);
    CHECK(j["elapsed_ms"].is_null());
    CHECK(run_json({"an-sing-spectrum", "--n", "12"})["gaps"] == nlohmann::json::parse("[[2,2]]"));
}

TEST_CASE("quiver reports") {
    CHECK(run_json({"quiver-spectrum", "--n", "3"})["times"] == nlohmann::json::parse("[0,1,2]"));
    CHECK(run_json({"quiver-tritime", "--n", "3", "--generator", "S1,S2,S3"})["times"] ==
          nlohmann::json::parse("[2]"));
    CHECK(run_json({"quiver-tritime", "--n", "3", "--generator", "P1,P2,P3"})["times"] ==
          nlohmann::json::parse("[1]"));
    CHECK(run_json({"quiver-tritime", "--n", "3", "--generator", "M(1,1),M(2,2),M(3,3)"})["times"] ==
          nlohmann::json::parse("[2]"));
}

TEST_CASE("other subcommands") {
    CHECK(run_json({"bounds", "--kind", "quintic", "--n", "4", "--d", "5"})["bounds"]["value"] == 159);
    const auto b = run_json({"braid-bound", "--genus", "2"});
    CHECK(b["bounds"]["lower"] == 8);
    CHECK(b["bounds"]["upper"] == 19);
    CHECK(run_json({"braid-bound", "--word", "1 2 1 2", "--m", "2"})["bounds"]["upper"] == 3);
    CHECK(run_json({"loewy", "--n", "5"})["bounds"]["loewy_length"] == 5);
    CHECK(run_json({"ll-infinity", "--n", "4"})["bounds"]["ll_infinity"] == 3);
    CHECK(run_json({"gaps", "--times", "0,1,2,5"})["gaps"] == nlohmann::json::parse("[[2,2]]"));
    CHECK(run_json({"ghost-chain", "--model", "an-sing", "--n", "12", "--generator", "V1", "--start", "V6"})
              ["per_generator"][0]["chain_length"] == 5);
    const auto lv = run_json({"level", "--model", "an-sing", "--n", "5", "--generator", "V1"});
    CHECK(lv["per_generator"][0]["levels"] == nlohmann::json::parse(R"({"V1": 0, "V2": 1})"));
    const auto w = run_json({"mutation-walk", "--n", "3"});
    CHECK(w["times"] == nlohmann::json::parse("[1,2]"));
}

TEST_CASE("presentation files") {
    const std::string path = "cli_test_presentation.json";
    {
        std::ofstream f(path);
        f << R"({"vertices": ["0", "1", "2"],
                 "arrows": [{"name": "b1", "source": "0", "target": "1", "degree": 1},
                            {"name": "b2", "source": "1", "target": "2", "degree": 1},
                            {"name": "z", "source": "0", "target": "2", "degree": 2}],
                 "products": [{"inputs": ["b1", "b2"], "output": {"z": 1}}]})";
    }
    CHECK(run_json({"ll-infinity", "--presentation", path})["bounds"]["ll_infinity"] == 3);
    CHECK(run_json({"loewy", "--presentation", path})["bounds"]["loewy_length"] == 3);
    CHECK(run({"ll-infinity", "--presentation", "missing.json"}).code == 2);
}

TEST_CASE("csv output") {
    const auto r = run({"an-sing-tritime", "--n", "8", "--generator", "V1", "--format", "csv", "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("V1,3") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"an-sing-spectrum", "--wat", "1"}).code == 2);
    CHECK(run({"an-sing-spectrum"}).code == 2);
    CHECK(run({"an-sing-tritime", "--n", "8", "--generator", "V9"}).code == 2);
    CHECK(run({"quiver-tritime", "--n", "3", "--generator", "M(2,1)"}).code == 2);
    CHECK(run({"bounds", "--kind", "quintic", "--n", "4", "--d", "6"}).code == 2);
    CHECK(run({"an-sing-spectrum", "--n", "8", "--format", "xml"}).code == 2);
}

TEST_CASE("reports are deterministic across worker counts") {
    for (std::vector<std::string> base : {std::vector<std::string>{"an-sing-spectrum", "--n", "14"},
                                          std::vector<std::string>{"quiver-spectrum", "--n", "3"}}) {
        auto one = base, eight = base;
        one.insert(one.end(), {"--jobs", "1", "--no-timing"});
        eight.insert(eight.end(), {"--jobs", "8", "--no-timing"});
        const auto a = run(one), b = run(eight);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("schema validation") {
    auto j = run_json({"gaps", "--times", "0,1,3"});
    const auto round = nlohmann::ordered_json::parse(j.dump());
    CHECK(round == j);
    auto bad = j;
    bad["gaps"] = nlohmann::json::parse("[[0,1]]");
    CHECK_THROWS_AS(validate_report(bad), InvalidArgument);
    auto missing = j;
    missing.erase("version");
    CHECK_THROWS_AS(validate_report(missing), InvalidArgument);
    Report empty;
    empty.command = "gaps";
    const auto e = nlohmann::ordered_json::parse(emit_report(empty, "json"));
    validate_report(e);
    CHECK(e["times"].empty());
    CHECK(e["gaps"].empty());
}
