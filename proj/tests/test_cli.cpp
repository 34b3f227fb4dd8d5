#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hiprop/errors.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

// Runs the frontend named by HIPROP_CLI with the given arguments.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("HIPROP_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool cli_available() { return std::getenv("HIPROP_CLI") != nullptr; }

} // namespace

TEST_CASE("closed-form report at defaults", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const RunResult res = run_cli("analytic");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1652.72") != std::string::npos);
    CHECK(res.output.find("0.0458375") != std::string::npos);
    CHECK(res.output.find("547.769") != std::string::npos);
}

TEST_CASE("invalid geometry exits with the parameter code", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const RunResult res = run_cli("analytic --R 100");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("requires R > r") != std::string::npos);
}

TEST_CASE("sweep rejects an invalid grid up front", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const RunResult res =
        run_cli("sweep --param v --from 0 --to 40 --steps 5 --replications 2 "
                "--max-slots 500 --output /tmp/hiprop_cli_reject.csv");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("requires v > 0") != std::string::npos);
}

TEST_CASE("unknown scheme exits with the parameter code", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const RunResult res =
        run_cli("simulate --scheme carrier_pigeon --max-slots 500");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("unknown scheme") != std::string::npos);
}

TEST_CASE("simulation output is reproducible per seed", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const std::string args =
        "simulate --scheme vmimo --seed 42 --replications 2 --max-slots 600";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("ips") != std::string::npos);
    const RunResult c = run_cli(
        "simulate --scheme vmimo --seed 43 --replications 2 --max-slots 600");
    CHECK(a.output != c.output);
}

TEST_CASE("missing subcommand is a usage error", "[cli]") {
    if (!cli_available()) SKIP("HIPROP_CLI not set");
    const RunResult res = run_cli("");
    CHECK(res.exit_code == 2);
}
