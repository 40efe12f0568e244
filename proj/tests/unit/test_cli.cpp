#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// Drives the installed binary end to end: exit codes, determinism, JSON mode.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(CREMONA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("catalog lists at least seven families") {
    RunResult r = run("catalog");
    CHECK(r.exit_code == 0);
    int count = 0;
    size_t pos = 0;
    while ((pos = r.out.find("family:", pos)) != std::string::npos) ++count, ++pos;
    CHECK(count >= 7);
}

TEST_CASE("catalog entry details and unknown names") {
    RunResult r = run("catalog grass2:6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ambient_dim: 14") != std::string::npos);
    CHECK(r.out.find("known_equations: 15") != std::string::npos);

    CHECK(run("catalog nosuch").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("linearize reports the degree pair and fundamental factor") {
    RunResult r = run("linearize segre:2,2 triangular");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("fundamental_factor: x00^3") != std::string::npos);
    CHECK(r.out.find("[PASS] degree-law") != std::string::npos);

    RunResult c = run("linearize segre-multi:1,1,1 cumulant:full");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("[PASS] linearization") != std::string::npos);

    // cumulant method demands hypercube coordinates
    CHECK(run("linearize segre:2,2 cumulant:full").exit_code == 2);

    RunResult rn = run("linearize rnc:6 triangular");
    CHECK(rn.exit_code == 0);
    CHECK(rn.out.find("[PASS] inverse-composition-identity") != std::string::npos);
}

TEST_CASE("every registered example passes") {
    for (const char* ex : {"ex-seg", "ex-tp", "ex-ver", "ex-grass", "ex-rnc", "ex-3segre",
                           "ex-3segre-cumulant", "ex-secant-toric", "ex-g36-quartic"}) {
        INFO(ex);
        CHECK(run(std::string("verify-example ") + ex).exit_code == 0);
    }
    CHECK(run("verify-example ex-secant-toric --n 4").exit_code == 0);
    CHECK(run("verify-example nosuch").exit_code == 2);
}

TEST_CASE("poset command") {
    RunResult r = run("poset full 3 --check-mobius-sum");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mobius_sum: 0") != std::string::npos);
    CHECK(r.out.find("1|2|3: mu(pi, 1-hat) = 2") != std::string::npos);  // mu(0-hat, 1-hat)

    RunResult single = run("poset full 1");
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("skipped") != std::string::npos);

    CHECK(run("poset full 15").exit_code == 2);  // over the cap
}

TEST_CASE("defect command is deterministic for a fixed seed") {
    RunResult a = run("defect segre:2,2 --seed 0 --json");
    RunResult b = run("defect segre:2,2 --seed 0 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"defect\": \"1\"") != std::string::npos);
}

TEST_CASE("secant and tangent emit parametrizations") {
    RunResult r = run("secant segre:1,1 --k 1 --transform");
    CHECK(r.exit_code == 0);
    RunResult t = run("tangent veronese2:2 --json");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("parametrization") != std::string::npos);
}

TEST_CASE("cumulant command") {
    RunResult r = run("cumulant 3 --poset interval");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] triangular") != std::string::npos);
    CHECK(r.out.find("[PASS] linearization") != std::string::npos);

    RunResult m = run("cumulant --multi 2,2");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("[PASS] linearization") != std::string::npos);
}
