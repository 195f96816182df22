#include <array>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "trichain/harness.hpp"

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;
};

RunResult runCli(const std::string& args) {
    const std::string cmd = std::string(TRICHAIN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixturePath(const std::string& name) {
    return std::string(TRICHAIN_FIXTURE_DIR) + "/" + name + ".sys";
}

}  // namespace

TEST_CASE("cli: solve with verification succeeds") {
    const auto r = runCli("solve " + fixturePath("ex1") + " --verify");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("components (3):") != std::string::npos);
    CHECK(r.output.find("verified: yes") != std::string::npos);
}

TEST_CASE("cli: json output carries the configuration") {
    const auto r = runCli("solve " + fixturePath("axb") +
                          " --strategy bubble --mode kalkbrener --format json --verify");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("\"strategy\": \"bubble\"") != std::string::npos);
    CHECK(r.output.find("\"mode\": \"kalkbrener\"") != std::string::npos);
    CHECK(r.output.find("\"x*a - b\"") != std::string::npos);
    CHECK(r.output.find("\"pointOracle\": null") != std::string::npos);
}

TEST_CASE("cli: input errors exit with code 2") {
    CHECK(runCli("solve /nonexistent-path.sys").exitCode == 2);
    const auto tmp = std::filesystem::temp_directory_path() / "cli_bad.sys";
    std::ofstream(tmp) << "vars: x\nx^-1\n";
    const auto r = runCli("solve " + tmp.string());
    CHECK(r.exitCode == 2);
    CHECK(r.output.find(":2:") != std::string::npos);  // line of the bad exponent
}

TEST_CASE("cli: parallel solve and thread override") {
    const auto r = runCli("solve " + fixturePath("zd1") + " --parallel cf --threads 2 --verify");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("threads=2") != std::string::npos);
}

TEST_CASE("cli: redundancy debug flag keeps the redundant chain") {
    const auto r =
        runCli("solve " + fixturePath("redundant") + " --strategy bubble --debug-no-rrc");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("components (2):") != std::string::npos);
    CHECK(r.output.find("{y; x + 1}") != std::string::npos);
}

TEST_CASE("cli: SOLVER_THREADS environment default") {
    const std::string cmd = "SOLVER_THREADS=3 " + std::string(TRICHAIN_CLI_PATH) + " solve " +
                            fixturePath("zd2") + " --parallel c 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    pclose(pipe);
    CHECK(out.find("threads=3") != std::string::npos);
}

TEST_CASE("cli: bench accepts a directory") {
    const auto dir = std::filesystem::temp_directory_path() / "benchdir";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(fixturePath("zd2"), dir / "zd2.sys",
                               std::filesystem::copy_options::overwrite_existing);
    const auto r = runCli("bench " + dir.string() + " --repeats 1 --threads 2 --format json");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("\"system\": \"zd2\"") != std::string::npos);
}

TEST_CASE("cli: bench renders the matrix") {
    const auto r = runCli("bench " + fixturePath("zd2") + " --repeats 1 --threads 2");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("serial(ms)") != std::string::npos);
    CHECK(r.output.find("zd2") != std::string::npos);
    CHECK(r.output.find("kalkbrener") != std::string::npos);
}
