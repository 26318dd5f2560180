#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end tests driving the installed binary; the build passes its path in.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CUBEZETA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("zeta --n 5 --d 1 prints the cycle polynomial") {
    auto r = run("zeta --n 5 --d 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 0 0 0 0 -2 0 0 0 0 1"));
}

TEST_CASE("zeta --n 2,2 lists the four divisor tuples with exponent 1") {
    auto r = run("zeta --n 2,2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "(1,1)"));
    CHECK(contains(r.out, "(1,2)"));
    CHECK(contains(r.out, "(2,1)"));
    CHECK(contains(r.out, "(2,2)"));
}

TEST_CASE("zeta --n 4,6 --format json has 12 factors and re-reads as JSON") {
    auto r = run("zeta --n 4,6 --format json");
    CHECK(r.exit_code == 0);
    std::size_t count = 0, pos = 0;
    while ((pos = r.out.find("\"dvec\"", pos)) != std::string::npos) { ++count; ++pos; }
    CHECK(count == 12);
    CHECK(r.out.front() == '{');
    CHECK(contains(r.out, "\"zeta_inverse\""));
}

TEST_CASE("psi --d 9 prints the univariate polynomial") {
    auto r = run("psi --d 9");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1 -3 0 1"));
    auto rp = run("psi --d 9 --pretty");
    CHECK(rp.exit_code == 0);
    CHECK(contains(rp.out, "x^3 - 3x + 1"));
}

TEST_CASE("psi --d 5,5 --orbit-split shows both orbit factors") {
    auto r = run("psi --d 5,5 --orbit-split");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-4 2 1"));  // x^2 + 2x - 4
    CHECK(contains(r.out, "1 2 1"));   // (x+1)^2
}

TEST_CASE("psi --d 3,5 is a single irreducible factor") {
    auto r = run("psi --d 3,5 --orbit-split --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"irreducible\":true"));
    CHECK(contains(r.out, "\"multiplicity\":1"));
}

TEST_CASE("orbits subcommand reports count and formula") {
    auto r = run("orbits --d 5,5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "orbits: 2"));
}

TEST_CASE("spectrum subcommand prints eigenvalue multiplicities") {
    auto r = run("spectrum --n 3,3 --d 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "x"));
}

TEST_CASE("verify orbits passes with small bounds") {
    auto r = run("verify orbits --qmax 2 --dmax 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "suite passed"));
    CHECK(contains(r.out, "PASS"));
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run("zeta").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("zeta --n 1,3").exit_code == 2);
    CHECK(run("verify nosuchsuite").exit_code == 2);
    CHECK(run("zeta --n 3,3 --d 5").exit_code == 2);
}

TEST_CASE("exit code 3 on resource exhaustion") {
    setenv("CUBEZETA_MAX_DEGREE", "2", 1);
    CHECK(run("psi --d 31,31").exit_code == 3);
    unsetenv("CUBEZETA_MAX_DEGREE");
}

TEST_CASE("output is byte-identical across repeated runs") {
    for (const char* cmd : {"zeta --n 4,6 --format json", "psi --d 5,5 --orbit-split --format json",
                            "orbits --d 8,12 --format json", "spectrum --n 3,4 --d 1 --format json"}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
