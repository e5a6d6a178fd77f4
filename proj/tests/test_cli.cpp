#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "svmc/cli.hpp"
#include "svmc/io.hpp"

using namespace svmc;

namespace {

const std::string kData = SVMC_TEST_DATA;
const std::string kTwo = kData + "/two_places.pnml";
const std::string kMutex = kData + "/mutex.pnml";

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "svmc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("svmc_test_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check: membership and count") {
    Run r = run({"check", "--net", kTwo, "--capacity", "3", "--formula", "fireable(t0)", "--contains", "3,1",
                 "--contains", "1,0", "--count"});
    REQUIRE(r.code == kExitOk);
    CHECK(has(r.out, "contains (3,1): true"));
    CHECK(has(r.out, "contains (1,0): false"));
    // p0 in {2,3} and p1 in {0,1,2}: the output place must have room.
    CHECK(has(r.out, "count: 6"));
}

TEST_CASE("check --json") {
    Run r = run({"check", "--net", kTwo, "--capacity", "3", "--formula", "EF fireable(t0)", "--contains", "3,0",
                 "--count", "--stats", "--json"});
    REQUIRE(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j.at("membership").at("3,0") == true);
    CHECK(j.contains("result"));
    CHECK(j.at("stats").at("final").get<std::size_t>() == j.at("result").size());
    CHECK(j.at("options").at("saturation") == true);
}

TEST_CASE("per-place capacities win over the uniform one") {
    std::string side = temp_file("caps.json", R"({"capacities": {"p1": 1}})");
    Run r = run({"check", "--net", kTwo, "--capacity", "3", "--capacities", side, "--formula", "fireable(t0)",
                 "--contains", "3,1", "--count"});
    REQUIRE(r.code == kExitOk);
    CHECK(has(r.out, "contains (3,1): false"));
    CHECK(has(r.out, "count: 2"));
    std::filesystem::remove(side);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"check", "--formula", "true"}).code == kExitUsage);
    CHECK(run({"check", "--net", kTwo, "--formula", "EF (", "--capacity", "2"}).code == kExitUsage);
    CHECK(run({"check", "--net", kTwo, "--formula", "true", "--capacity", "x"}).code == kExitUsage);
    CHECK(run({"check", "--net", kTwo, "--formula", "true", "--contains", "1,2,3"}).code == kExitUsage);
    CHECK(run({"check", "--net", kData + "/missing.pnml", "--formula", "true"}).code == kExitUsage);
    CHECK(run({"check", "--net", kTwo, "--formula", "fireable(nope)"}).code == kExitUsage);
    // Counting needs every place bounded.
    Run r = run({"check", "--net", kTwo, "--formula", "true", "--count"});
    CHECK(r.code == kExitUsage);
    CHECK(has(r.err, "finite capacity"));
}

TEST_CASE("iteration cap exits with 2") {
    Run r = run({"check", "--net", kMutex, "--formula", "EF (fireable(t3) && fireable(t4))", "--no-saturation",
                 "--max-iterations", "1"});
    CHECK(r.code == kExitNonConvergence);
    CHECK(has(r.err, "did not converge"));
}

TEST_CASE("verify") {
    Run one = run({"verify", "--net", kTwo, "--capacity", "3", "--formula", "AG EF fireable(t0)"});
    CHECK(one.code == kExitOk);
    CHECK(has(one.out, "PASS: 16 states"));

    Run suite = run({"verify", "--random", "25", "--seed", "7", "--json"});
    REQUIRE(suite.code == kExitOk);
    Json j = Json::parse(suite.out);
    CHECK(j.at("cases") == 25);
    CHECK(j.at("failures") == 0);

    CHECK(run({"verify"}).code == kExitUsage);
}

TEST_CASE("enumerate, directly and from a saved result") {
    Run e = run({"enumerate", "--net", kTwo, "--capacity", "3", "--formula", "fireable(t0)"});
    REQUIRE(e.code == kExitOk);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 6);

    Run c = run({"check", "--net", kTwo, "--capacity", "3", "--formula", "fireable(t0)", "--json"});
    std::string saved = temp_file("result.json", c.out);
    Run s = run({"enumerate", "--net", kTwo, "--capacity", "3", "--svs", saved, "--json"});
    REQUIRE(s.code == kExitOk);
    Json j = Json::parse(s.out);
    CHECK(j.at("count") == "6");
    CHECK(j.at("markings").size() == 6);

    Run lim = run({"enumerate", "--net", kTwo, "--capacity", "3", "--formula", "true", "--limit", "4"});
    CHECK(std::count(lim.out.begin(), lim.out.end(), '\n') == 4);
    std::filesystem::remove(saved);
}
