// End-to-end CLI tests: every subcommand runs as a subprocess and is checked
// for exit code, output shape, and file side effects. Exit convention:
// 0 = success, 1 = a verified condition failed, 2 = usage error.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "specint/family.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;  // stdout only; stderr is left on the test log
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPECINT_CLI_PATH) + " " + args;
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Prefix the invocation itself (environment overrides).
RunResult run_env_cli(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(SPECINT_CLI_PATH) + " " + args;
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "specint_cli_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("version and usage errors") {
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("2>/dev/null").exit_code == 2);                 // missing subcommand
    CHECK(run_cli("no-such-command 2>/dev/null").exit_code == 2);
    CHECK(run_cli("height --set '{0,1}' --bogus 2>/dev/null").exit_code == 2);
    CHECK(run_cli("bounds --n 0 --l 1 2>/dev/null").exit_code == 2);  // range check
}

TEST_CASE("height prints a bare value by default and JSON on request") {
    RunResult r = run_cli("height --set '{0,1}'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "h=2\n");

    RunResult j = run_cli("height --set '{0,1}' --json");
    REQUIRE(j.exit_code == 0);
    Json doc = Json::parse(j.out);
    CHECK(doc["tool"] == "specint");
    CHECK(doc["command"] == "height");
    CHECK(doc["results"]["h"] == 2);
    CHECK(doc["ok"] == true);

    CHECK(run_cli("height --set '{0,1' 2>/dev/null").exit_code == 2);  // bad literal
}

TEST_CASE("height memo dump is a JSON array") {
    fs::path memo = scratch_dir() / "memo.json";
    RunResult r = run_cli("height --set '{0,1,2}' --dump-memo " + memo.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream is(memo);
    REQUIRE(is);
    Json arr = Json::parse(is);
    CHECK(arr.is_array());
    CHECK(!arr.empty());
    CHECK(arr.front().contains("set"));
    CHECK(arr.front().contains("h"));
}

TEST_CASE("bounds emits the envelope or a CSV table") {
    RunResult r = run_cli("bounds --n 100 --l 1");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["command"] == "bounds");
    double first = doc["results"]["pair_product"]["first_log2"].get<double>();
    CHECK(first == Catch::Approx(186.068).margin(0.01));
    double single_first = doc["results"]["single_family"]["first_log2"].get<double>();
    CHECK(single_first == Catch::Approx(first / 2).margin(1e-9));

    RunResult c = run_cli("bounds --n 100 --l 1 --csv");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out.substr(0, 2) == "n,");
    CHECK(c.out.find("100,1,") != std::string::npos);
}

TEST_CASE("construct round-trips through the family file format") {
    fs::path fam = scratch_dir() / "ev6.fam";
    RunResult r = run_cli("construct --name eventown --n 6 --out " + fam.string());
    REQUIRE(r.exit_code == 0);
    specint::Family ev = specint::read_family_file(fam.string());
    CHECK(ev.size() == 8);
    CHECK(ev.n() == 6);

    // constructing to stdout prints the family file itself
    RunResult direct = run_cli("construct --name eventown --n 6");
    CHECK(direct.out.find("n=6") != std::string::npos);

    // out-of-range and bad names are usage errors
    CHECK(run_cli("construct --name eventown --n 5 2>/dev/null").exit_code == 2);
    CHECK(run_cli("construct --name eventown --n 30 2>/dev/null").exit_code == 2);
    CHECK(run_cli("construct --name nonsense --n 6 2>/dev/null").exit_code == 2);
}

TEST_CASE("procedure runs a constructed pair and audits its own trace") {
    fs::path fam = scratch_dir() / "ev8.fam";
    REQUIRE(run_cli("construct --name eventown --n 8 --out " + fam.string()).exit_code == 0);

    fs::path trace = scratch_dir() / "trace.json";
    RunResult r = run_cli("procedure --a " + fam.string() + " --b " + fam.string() +
                          " --m evens --trace " + trace.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("steps=8") != std::string::npos);
    CHECK(r.out.find("stop=ground_exhausted") != std::string::npos);
    CHECK(r.out.find("audit: ok") != std::string::npos);

    std::ifstream is(trace);
    REQUIRE(is);
    Json tj = Json::parse(is);
    CHECK(tj["steps"].size() == 8);
    CHECK(tj["steps"][0]["case"] == "C2");

    // missing family file is a usage error
    CHECK(run_cli("procedure --a /nonexistent.fam --b /nonexistent.fam --m evens 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("search reports an optimum with its seed recorded") {
    RunResult r = run_cli("search --n 4 --m evens --seed 7");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["results"]["best_size"] == 4);
    CHECK(doc["results"]["optimal"] == true);
    CHECK(doc["seed"] == 7);

    RunResult p = run_cli("search --n 3 --m evens --mode pair");
    REQUIRE(p.exit_code == 0);
    Json pd = Json::parse(p.out);
    CHECK(pd["results"].contains("best_product"));

    // pair mode rejects family-only flags
    CHECK(run_cli("search --n 3 --m evens --mode pair --no-diagonal 2>/dev/null").exit_code ==
          2);
}

TEST_CASE("verify runs one suite or all of them") {
    RunResult r = run_cli("verify --suite constants");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["command"] == "verify --suite constants");
    CHECK(doc["ok"] == true);

    RunResult csv = run_cli("verify --suite remark --csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("suite,ok,violations,timing_ms") != std::string::npos);

    CHECK(run_cli("verify --suite no-such-suite 2>/dev/null").exit_code == 2);
}

TEST_CASE("misint certifies the pipeline hypotheses") {
    RunResult r = run_cli("misint --n 100 --t 19");
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["results"]["all_primes_found"] == true);
    CHECK(doc["ok"] == true);

    // hypothesis violation is a usage error, not a verification failure
    CHECK(run_cli("misint --n 100 --t 15 2>/dev/null").exit_code == 2);
}

TEST_CASE("fw-check and primes use exit code 1 for condition failures") {
    CHECK(run_cli("fw-check --k 5 --t 2").exit_code == 0);
    RunResult bad = run_cli("fw-check --k 9 --t 3");
    CHECK(bad.exit_code == 1);
    Json doc = Json::parse(bad.out);
    CHECK(doc["ok"] == false);
    CHECK(doc["results"]["gcd"] == "1");

    CHECK(run_cli("primes --s 100").exit_code == 0);
    CHECK(run_cli("primes --s 126").exit_code == 1);
    RunResult csv = run_cli("primes --s 100 --csv");
    CHECK(csv.out.find("97") != std::string::npos);
}

TEST_CASE("SPECINT_THREADS env var is validated") {
    CHECK(run_env_cli("SPECINT_THREADS=2", "search --n 4 --m evens").exit_code == 0);
    CHECK(run_env_cli("SPECINT_THREADS=junk", "search --n 4 --m evens 2>/dev/null").exit_code ==
          2);
    CHECK(run_env_cli("SPECINT_THREADS=0", "search --n 4 --m evens 2>/dev/null").exit_code == 2);
}
