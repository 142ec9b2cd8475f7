#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// APPELL_CLI_PATH is injected by the build and points at the real binary;
// every case here exercises the tool end to end through a shell.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(APPELL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("numbers emits frozen tables") {
    const RunResult json = run_cli("numbers --family genocchi --order 1 --max-n 8");
    CHECK(json.exit_code == 0);
    CHECK(json.out ==
          "{\"family\":\"genocchi\",\"order\":1,"
          "\"values\":[\"0\",\"1\",\"-1\",\"0\",\"1\",\"0\",\"-3\",\"0\",\"17\"]}\n");

    const RunResult csv = run_cli("--format csv numbers --family bernoulli --order 1 --max-n 2");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,value\n0,1\n1,-1/2\n2,1/6\n");
}

TEST_CASE("poly prints coefficients or an evaluated value") {
    CHECK(run_cli("poly --family genocchi --order 2 --n 3").out == "[\"-6\",\"6\"]\n");
    CHECK(run_cli("poly --family bernoulli --order 3 --n 1").out == "[\"-3/2\",\"1\"]\n");
    CHECK(run_cli("poly --family euler --order 3 --n 0").out == "[\"1\"]\n");
    // Genocchi below its order is identically zero.
    CHECK(run_cli("poly --family genocchi --order 2 --n 1").out == "[\"0\"]\n");

    const RunResult at = run_cli("poly --family genocchi --order 2 --n 3 --at 2");
    CHECK(at.exit_code == 0);
    CHECK(at.out == "\"6\"\n");
    CHECK(run_cli("--format csv poly --family genocchi --order 2 --n 3 --at 2").out ==
          "value\n6\n");
    CHECK(run_cli("--format csv poly --family genocchi --order 2 --n 1").out ==
          "degree,coefficient\n0,0\n");
}

TEST_CASE("basis reports offset-aware coefficients") {
    const RunResult e = run_cli("basis --to euler --order 1 --poly '[\"0\",\"0\",\"1\"]'");
    CHECK(e.exit_code == 0);
    CHECK(e.out ==
          "{\"family\":\"euler\",\"order\":1,\"offset\":0,"
          "\"coefficients\":[\"1/2\",\"1\",\"1\"]}\n");

    const RunResult g = run_cli("basis --to genocchi --order 2 --poly '[\"1\"]'");
    CHECK(g.exit_code == 0);
    CHECK(g.out ==
          "{\"family\":\"genocchi\",\"order\":2,\"offset\":2,\"coefficients\":[\"1/2\"]}\n");

    CHECK(run_cli("--format csv basis --to genocchi --order 2 --poly '[\"1\"]'").out ==
          "index,coefficient\n2,1/2\n");
}

TEST_CASE("audit exit code distinguishes findings from errors") {
    // The default sweep must succeed: every oracle-backed identity has an
    // accepted reading in range.
    const RunResult full = run_cli("audit --n 0..4");
    CHECK(full.exit_code == 0);
    CHECK(full.out.find("\"ok\":true") != std::string::npos);

    // Evaluating only the misprinted reading of an oracle-backed identity is
    // a finding, not an error.
    const RunResult bad = run_cli("audit --identities Eq13 --variants as-written --n 0..4");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("\"ok\":false") != std::string::npos);
    CHECK(bad.out.find("\"mismatch_degree\"") != std::string::npos);

    CHECK(run_cli("audit --k 3..1").exit_code == 2);
    CHECK(run_cli("audit --identities NoSuchTag").exit_code == 2);
    CHECK(run_cli("audit --variants sometimes").exit_code == 2);
}

TEST_CASE("audit output is byte-stable across runs and thread counts") {
    const std::string args = "audit --k 1..2 --n 0..5 --threads ";
    const RunResult serial = run_cli(args + "1");
    const RunResult wide = run_cli(args + "6");
    const RunResult again = run_cli(args + "6");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == wide.out);
    CHECK(wide.out == again.out);

    const std::string csv = "--format csv audit --k 1..2 --n 0..5 --threads ";
    const RunResult c1 = run_cli(csv + "1");
    const RunResult c2 = run_cli(csv + "5");
    CHECK(c1.out == c2.out);
    CHECK(c1.out.rfind("tag,variant,k,n,outcome,mismatch_degree,lhs,rhs\n", 0) == 0);
}

TEST_CASE("--output writes the same bytes to a file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "appell_cli_numbers_test.json";
    const std::string args = "numbers --family euler --order 2 --max-n 5";
    const RunResult direct = run_cli(args);
    const RunResult to_file = run_cli(args + " --output " + path.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());

    std::ifstream in(path, std::ios::binary);
    std::stringstream file_content;
    file_content << in.rdbuf();
    CHECK(file_content.str() == direct.out);
    fs::remove(path);

    CHECK(run_cli(args + " --output /nonexistent-dir/out.json").exit_code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    CHECK(run_cli("").exit_code == 2);                      // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("numbers --family euler").exit_code == 2);  // missing required options
    CHECK(run_cli("numbers --family klein --order 1 --max-n 3").exit_code == 2);
    CHECK(run_cli("--format yaml numbers --family euler --order 1 --max-n 3").exit_code == 2);
    CHECK(run_cli("numbers --family genocchi --order 0 --max-n 3").exit_code == 2);
    CHECK(run_cli("poly --family euler --order 1 --n 2 --at x").exit_code == 2);
    CHECK(run_cli("basis --to euler --order 1 --poly not-json").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("audit --help").exit_code == 0);
}

}  // TEST_SUITE
