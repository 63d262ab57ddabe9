#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* env = std::getenv("HEISGEO_CLI");
    return env ? env : "";
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("cli available") { REQUIRE(!cli_path().empty()); }

TEST_CASE("cli dct") {
    const RunResult r = run("dct --alpha 2");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"]["beta_minus"] == 2.0);
    CHECK(j["results"]["beta_plus"] == 3.0);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "dct");
}

TEST_CASE("cli dist vertical") {
    const RunResult r = run("dist --p 0,0,0 --q 0,0,1");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    const double d = j["results"]["distance"].get<double>();
    CHECK(std::fabs(d - 1.7724538509055160) <= 1e-8);
}

TEST_CASE("cli bb") {
    const RunResult r = run("bb --p 0,0,0 --q 0,0,1");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::fabs(j["results"]["cc_length"].get<double>() - 2.1213203435596426) <= 1e-12);
    CHECK(j["results"]["segments"].size() == 4);
}

TEST_CASE("cli exit codes") {
    CHECK(run("dct --alpha 7").code == 1);       // computation failure, structured error
    CHECK(run("nonsense --flag 3").code == 2);   // usage error
    CHECK(run("dct").code == 2);                 // missing required option
    CHECK(run("dist --p 0,0 --q 0,0,1").code == 2);   // malformed point
    CHECK(run("dist --p 0,zz,0 --q 0,0,1").code == 2);
    const RunResult err = run("dct --alpha 7");
    const json j = json::parse(err.out);
    CHECK(j["error"]["type"] == "invalid-parameter");
}

TEST_CASE("cli maze build + certify + dim round trip") {
    const std::string maze_path = "/tmp/heisgeo_test_maze.json";
    const RunResult build = run("--out " + maze_path + " maze build --n 1 --levels 1");
    REQUIRE(build.code == 0);

    // extract the maze payload for the certify/dim inputs
    std::ifstream in(maze_path);
    json record;
    in >> record;
    const std::string tree_path = "/tmp/heisgeo_test_tree.json";
    std::ofstream out(tree_path);
    out << record["results"].dump();
    out.close();

    const RunResult cert = run("maze certify --in " + tree_path + " --step 0.25");
    REQUIRE(cert.code == 0);
    const json c = json::parse(cert.out);
    CHECK(c["results"]["interior_pass"] == true);
    CHECK(c["results"]["interior_cost"].get<double>() >= 40.0);

    const RunResult dim = run("dim --in " + tree_path +
                              " --gauge euclidean --scales "
                              "0.625,0.3125,0.15625,0.078125,0.0390625,0.01953125");
    REQUIRE(dim.code == 0);
    const json d = json::parse(dim.out);
    const double slope = d["results"]["slope"].get<double>();
    CHECK(slope > 1.5);
    CHECK(slope < 2.5);
}

TEST_CASE("cli plan with obstacle file and svg output") {
    const std::string obs_path = "/tmp/heisgeo_test_obs.json";
    {
        std::ofstream out(obs_path);
        out << R"({"schema":1,"boxes":[{"x":[0.4,0.6],"y":[-0.05,0.05],"t":[-0.05,0.05]}],"balls":[]})";
    }
    const std::string svg_path = "/tmp/heisgeo_test_plan.svg";
    const RunResult r =
        run("--svg " + svg_path + " plan --p 0,0,0 --q 1,0,0 --obstacles " + obs_path +
            " --seed 7");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"]["clearance_certificate"].get<double>() > 0.0);
    CHECK(j["results"]["perturbed"] == true);
    CHECK(j["seed"] == 7);

    std::ifstream svg(svg_path);
    REQUIRE(svg.good());
    std::string first_line;
    std::getline(svg, first_line);
    CHECK(first_line.find("<svg") != std::string::npos);

    // determinism: same seed reproduces the results payload bit for bit
    const RunResult r2 =
        run("plan --p 0,0,0 --q 1,0,0 --obstacles " + obs_path + " --seed 7");
    const json j2 = json::parse(r2.out);
    CHECK(j2["results"].dump() == j["results"].dump());
}

TEST_CASE("cli assemble") {
    const RunResult r = run("assemble --n-max 3");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"]["components"].size() == 3);
    CHECK(j["results"]["includes_origin"] == true);
    const double r2 = j["results"]["components"][1]["radius"].get<double>();
    CHECK(r2 < 1.0 / 40.0);
}
