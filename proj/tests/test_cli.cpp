#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("DELTACALC_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("passing suite exits 0") {
    auto res = run_cli("verify --suite rank4-6 --q 2 --m 1 --trials 2 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "OK"));
}

TEST_CASE("unknown flag exits 2") {
    auto res = run_cli("verify --suite rank3 --q 2 --m 1 --frobnicate");
    CHECK(res.exit_code == 2);
}

TEST_CASE("bad suite name exits 2 and names the flag") {
    auto res = run_cli("verify --suite rank5 --q 2 --m 1");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.output, "--suite"));
}

TEST_CASE("missing subcommand exits 2") {
    auto res = run_cli("");
    CHECK(res.exit_code == 2);
}

TEST_CASE("json reports are byte-identical across runs") {
    std::string args = "--json verify --suite rank3 --q 3 --m 1 --trials 3 --seed 99";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"suite\""));
    CHECK(contains(a.output, "\"seed\""));
}

TEST_CASE("json reports are identical between serial and parallel runs") {
    std::string args = "--json verify --suite rank4-7 --q 2 --m 1 --trials 3 --seed 5";
    auto par = run_cli(args);
    auto ser = run_cli(args + " --serial");
    CHECK(par.exit_code == 0);
    CHECK(par.output == ser.output);
}

TEST_CASE("dickson command prints all columns") {
    auto res = run_cli("dickson --n 2 --q 2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "Q_{2,0}"));
    CHECK(contains(res.output, "Q_{2,1}"));
}

TEST_CASE("moore L_1 is x1") {
    auto res = run_cli("moore --s 1 --q 2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "L_1 = x1"));
}

TEST_CASE("delta exact value prints") {
    auto res = run_cli("delta --s 1 --m 1 --q 2 --f x1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "delta_1(f) ="));
}

TEST_CASE("lrs --at-1 prints an integer") {
    auto res = run_cli("lrs --n 4 --m 1 --q 2 --at-1");
    CHECK(res.exit_code == 0);
    int v = std::atoi(res.output.c_str());
    CHECK(v > 0);
}

TEST_CASE("hmatch check reports a violation witness") {
    // q = 2, m = 2: threshold is 3, and all coordinate sums of (x2, x1*x2) stay below it
    auto res = run_cli("--json hmatch check --q 2 --m 2 --k 3 --f x2 --G x1*x2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "\"holds\":false"));
    CHECK(contains(res.output, "\"alpha\""));
}

TEST_CASE("invariant-dim matches the small frozen value") {
    auto res = run_cli("invariant-dim --n 2 --q 2 --m 1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, ": 2"));
}

TEST_CASE("steenrod probe runs") {
    auto res = run_cli("steenrod probe --i 1 --n 2 --s 1 --q 2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "divisible"));
}

TEST_CASE("reproduce-appendix emits the six summary lines") {
    auto res = run_cli("reproduce-appendix");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "Summary:"));
    CHECK(contains(res.output, " (6) fractional q=2,m=1: OK"));
    CHECK(contains(res.output, " (6) fractional q=2,m=2: OK"));
    CHECK(contains(res.output, " (7) fractional q=2,m=1: OK"));
    CHECK(contains(res.output, " (7) fractional q=2,m=2: OK"));
    CHECK(contains(res.output, " (7) numerator (theoretical) q=2,m=1: OK"));
    CHECK(contains(res.output, " (7) numerator (theoretical) q=2,m=2: OK"));
}
