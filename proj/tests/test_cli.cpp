#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// EULERW_BIN is injected by the build as the absolute path of the binary.
// raw = true runs `args` as a complete shell command instead of binary + args.
RunResult run(const std::string& args, bool raw = false) {
    const std::string cmd =
        (raw ? args : std::string(EULERW_BIN) + " " + args) + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("triangle rows and entries") {
    const auto row = run("eulerian 3 --format csv");
    CHECK(row.exit_code == 0);
    CHECK(row.out == "k,value\n0,1\n1,4\n2,1\n");
    const auto entry = run("eulerian 4 2");
    CHECK(entry.exit_code == 0);
    CHECK(contains(entry.out, "\"value\": \"11\""));
    const auto big = run("eulerian 40 20 --format csv");
    CHECK(big.exit_code == 0);
    CHECK(contains(big.out, "40,20,"));
}

TEST_CASE("exact pmf and cdf") {
    const auto pmf = run("pmf wn 4 --format csv");
    CHECK(pmf.exit_code == 0);
    CHECK(contains(pmf.out, "1,1/6,"));
    CHECK(contains(pmf.out, "2,2/3,"));
    const auto fs = run("pmf floorsum 3 --format csv");
    CHECK(fs.exit_code == 0);
    CHECK(contains(fs.out, "0,1/6,"));
    const auto cdf = run("cdf wn 4 1");
    CHECK(cdf.exit_code == 0);
    CHECK(contains(cdf.out, "\"1/6\""));
    const auto lp_exact = run("cdf wn 4 1 --via-lp --exact");
    CHECK(contains(lp_exact.out, "\"1/6\""));
    const auto lp_float = run("cdf wn 4 1 --via-lp --format csv");
    CHECK(contains(lp_float.out, "4,1,0.16666666666666"));
}

TEST_CASE("closed-form probability of competing exponential sums") {
    const auto half = run("lp --a 1 --b 1 --exact --format csv");
    CHECK(half.exit_code == 0);
    CHECK(half.out == "value\n1/2\n");
    const auto five_sixths = run("lp --a 1 2 --b 1 --exact");
    CHECK(contains(five_sixths.out, "\"5/6\""));
    const auto third = run("lp --a 1 --b 2 --exact");
    CHECK(contains(third.out, "\"1/3\""));
    const auto dup = run("lp --a 1 1 --b 2");
    CHECK(dup.exit_code == 2);
}

TEST_CASE("heavy-tail closed forms") {
    const auto cdf = run("levy cdf 3 1 --format csv");
    CHECK(cdf.exit_code == 0);
    CHECK(cdf.out == "n,k,value\n3,1,0.5\n");
    const auto limit = run("levy limit 0.5 --format csv");
    CHECK(limit.out == "x,cdf,density\n0.5,0.5,1.909859317102744\n");
    const auto edge = run("levy limit 1 --format csv");
    CHECK(edge.exit_code == 0);
    CHECK(contains(edge.out, "1,1,\n"));
    const auto bad = run("levy cdf 1 0");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("normal-sample closed forms") {
    const auto four = run("normal-case 4 --format csv");
    CHECK(four.exit_code == 0);
    CHECK(contains(four.out, "1,0.17547965609182181,proved"));
    CHECK(contains(four.out, "2,0.64904068781635"));
    const auto five = run("normal-case 5 --format csv");
    CHECK(contains(five.out, "conjectured"));
    const auto bad = run("normal-case 6");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("voting commands") {
    const auto opt = run("vote optimal --utilities 10 6 0 --format csv");
    CHECK(opt.exit_code == 0);
    CHECK(opt.out == "index,utility,approve\n1,10,1\n2,6,1\n3,0,0\n");
    const auto gain = run("vote gain --utilities 10 6 0 --approve 1 2 --p 1 --format csv");
    CHECK(gain.out == "value\n16\n");
    const auto pol = run("vote polarized --m 500 --ballot A --exact --format csv");
    CHECK(pol.exit_code == 0);
    CHECK(contains(pol.out, "500,A,5.2519984"));
    const auto bad = run("vote gain --utilities 10 6 --approve 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("sampling is seeded and thread-count invariant") {
    const std::string base = "sample --model uniform -n 4 --samples 50000 --seed 3";
    const auto one = run(base + " --threads 1");
    const auto four = run(base + " --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
    const auto floor_bad = run("sample --model normal -n 3 --samples 10 --floor-sum");
    CHECK(floor_bad.exit_code == 2);
}

TEST_CASE("environment seed override") {
    const std::string tail = " sample --model uniform -n 4 --samples 20000 --format csv";
    const auto via_env = run(std::string("env EULERW_SEED=3 ") + EULERW_BIN + tail, true);
    const auto via_flag = run("sample --model uniform -n 4 --samples 20000 --seed 3 --format csv");
    CHECK(via_env.out == via_flag.out);
    const auto bad_env = run(std::string("env EULERW_SEED=zebra ") + EULERW_BIN + tail, true);
    CHECK(bad_env.exit_code == 2);
}

TEST_CASE("json output is machine-parseable and stable") {
    const auto a = run("pmf wn 5");
    const auto b = run("pmf wn 5");
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"label\""));
    const auto missing = run("eulerian");
    CHECK(missing.exit_code != 0);
    const auto unknown = run("frobnicate");
    CHECK(unknown.exit_code != 0);
}
