#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* path = std::getenv("QM_BIN");
    REQUIRE_MESSAGE(path != nullptr, "QM_BIN must point at the qm binary");
    return path;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

using Json = nlohmann::ordered_json;

} // namespace

TEST_CASE("dist command") {
    const auto r = run("dist --n 3");
    CHECK(r.exit_code == 0);
    const auto env = Json::parse(r.out);
    CHECK(env["results"]["min_cost"] == 8);
    CHECK(env["results"]["counts"] == Json::array({"2", "4"}));

    const auto zero = run("dist --n 0");
    CHECK(zero.exit_code == 0);
    const auto zenv = Json::parse(zero.out);
    CHECK(zenv["results"]["min_cost"] == 0);
    CHECK(zenv["results"]["counts"] == Json::array({"1"}));

    const auto bst = run("dist --n 3 --statistic bst-path");
    CHECK(bst.exit_code == 0);
    const auto benv = Json::parse(bst.out);
    CHECK(benv["results"]["min_cost"] == 2);
    CHECK(benv["results"]["counts"] == Json::array({"2", "4"}));
}

TEST_CASE("dist envelope golden output") {
    const auto r = run("dist --n 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == R"({
  "command": "dist",
  "parameters": {
    "n": 3,
    "statistic": "comparisons",
    "max_n": 64
  },
  "results": {
    "n": 3,
    "total": "6",
    "min_cost": 8,
    "max_cost": 9,
    "counts": [
      "2",
      "4"
    ]
  },
  "metadata": {
    "tool": "qm",
    "version": "1.0.0"
  }
}
)");
}

TEST_CASE("cli json output round-trips byte for byte") {
    for (const std::string args :
         {"dist --n 4", "moments --n 3 --order 2 --source closed",
          "simulate --n 5 --trials 100 --seed 9"}) {
        const auto r = run(args);
        REQUIRE(r.exit_code == 0);
        CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("moments command and source routes") {
    const auto closed = run("moments --n 3 --order 2 --source closed");
    CHECK(closed.exit_code == 0);
    const auto cenv = Json::parse(closed.out);
    CHECK(cenv["results"]["mean"]["exact"] == "26/3");
    CHECK(cenv["results"]["variance"]["exact"] == "2/9");

    const auto exact = run("moments --n 3 --order 2 --source exact");
    CHECK(exact.exit_code == 0);
    const auto eenv = Json::parse(exact.out);
    CHECK(eenv["results"]["mean"]["exact"] == cenv["results"]["mean"]["exact"]);
    CHECK(eenv["results"]["variance"]["exact"] == cenv["results"]["variance"]["exact"]);

    CHECK(run("moments --n 3 --order 3 --source closed").exit_code == 4);
    CHECK(run("moments --n 3 --order 1 --source exact").exit_code == 2);
}

TEST_CASE("simulate command") {
    const auto r = run("simulate --n 2 --trials 100 --seed 1");
    CHECK(r.exit_code == 0);
    const auto env = Json::parse(r.out);
    CHECK(env["results"]["sample_mean"] == 5.0);
    CHECK(env["results"]["sample_variance"] == 0.0);
    CHECK(env["metadata"]["prng"]["algorithm"] == "xoshiro256** (splitmix64-seeded)");
    CHECK(env["metadata"]["prng"]["stream_derivation"] ==
          "splitmix64(seed + (index+1)*0x9e3779b97f4a7c15)");

    CHECK(run("simulate --n 0 --trials 10 --seed 1").exit_code == 2);
    CHECK(run("simulate --n 5 --trials 1 --seed 1").exit_code == 2);
}

TEST_CASE("repeated simulate runs are byte-identical") {
    const auto a = run("simulate --n 12 --trials 2000 --seed 77");
    const auto b = run("simulate --n 12 --trials 2000 --seed 77");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify command") {
    const auto r = run("verify --max-n-brute 4 --max-n-exact 10 --series-order 12");
    CHECK(r.exit_code == 0);
    const auto env = Json::parse(r.out);
    CHECK(env["results"]["all_pass"] == true);

    // degenerate range still verifies (brute checks cover n = 0 only)
    const auto zero = run("verify --max-n-brute 0 --max-n-exact 5 --series-order 8");
    CHECK(zero.exit_code == 0);
    const auto zenv = Json::parse(zero.out);
    CHECK(zenv["results"]["checks"][0]["detail"] == "checked n <= 0");

    CHECK(run("verify --max-n-brute 11 --brute-cap 10").exit_code == 3);
}

TEST_CASE("usage and resource-limit exit codes") {
    CHECK(run("dist --n 200").exit_code == 3);
    CHECK(run("dist").exit_code == 2);
    CHECK(run("dist --n 3 --statistic sideways").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("dist --n 3", "QM_MAX_N=2 ").exit_code == 3);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("csv output carries the same values") {
    const auto csv = run("dist --n 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,statistic,cost,count\n3,comparisons,8,2\n3,comparisons,9,4\n");

    const auto env_format = run("dist --n 3", "QM_FORMAT=csv ");
    CHECK(env_format.out == csv.out);
}
