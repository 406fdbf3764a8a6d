#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>
#include <ubkit/json_io.hpp>

#include "support.hpp"

TEST_SUITE_BEGIN("cli");

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_raw(const std::string& command) {
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run(const std::string& args, const std::string& tail = "2>/dev/null") {
    return run_raw(std::string(UBKIT_BIN_PATH) + " " + args + " " + tail);
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "ubkit_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("construct emits a loadable document") {
    const RunResult result = run("construct minimal-gupb --shape 2,2");
    REQUIRE(result.exit_code == 0);
    const ubkit::StateSet set = ubkit::state_set_from_json_text(result.output);
    CHECK(set.size() == 3);
    CHECK(set.at(0).label() == "psi(0,0)");
    CHECK(set.at(2).label() == "psi(inf,inf)");
}

TEST_CASE("construct covers every family") {
    const struct {
        const char* args;
        int expected_states;
    } cases[] = {
        {"construct cross-set --d 3", 5},
        {"construct fourier-pairs --d 3", 6},
        {"construct ghz-triple --k 3 --x 010", 3},
        {"construct theorem2-basis --shape 2,2", 4},
        {"construct example2", 4},
        {"construct max-entangled --d 2 --m 1 --n 1", 1},
    };
    for (const auto& c : cases) {
        const RunResult result = run(c.args);
        REQUIRE(result.exit_code == 0);
        CHECK(ubkit::state_set_from_json_text(result.output).size() == c.expected_states);
    }
}

TEST_CASE("construct rejects violated preconditions with exit 1") {
    CHECK(run("construct ghz-triple --k 2 --x 11").exit_code == 1);
    const RunResult message = run("construct ghz-triple --k 2 --x 11", "2>&1 >/dev/null");
    CHECK(message.output.find("0^K,1^K") != std::string::npos);

    CHECK(run("construct theorem2-basis --shape 2,2 --points 1,-1,2,3").exit_code == 1);
    CHECK(run("construct minimal-gupb --shape 2,2 --indices \"0,0;0,1;inf,inf\"").exit_code ==
          1);
    CHECK(run("construct no-such-family").exit_code == 1);
}

TEST_CASE("certify exit codes: 0 positive, 3 negative, 1 error") {
    const fs::path dir = scratch_dir();
    const fs::path example1 = dir / "example1.json";
    const fs::path ghz = dir / "ghz.json";
    REQUIRE(run("construct minimal-gupb --shape 2,2 --output " + example1.string()).exit_code ==
            0);
    REQUIRE(run("construct ghz-triple --k 2 --x 01 --output " + ghz.string()).exit_code == 0);

    CHECK(run("certify gub " + example1.string() + " --seed 3").exit_code == 0);
    CHECK(run("certify locc-unambiguous " + ghz.string() + " --seed 3").exit_code == 3);
    CHECK(run("certify extendible " + example1.string() + " --seed 3").exit_code == 3);
    CHECK(run("certify locc-unambiguous " + (dir / "missing.json").string()).exit_code == 1);

    const fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run("certify gub " + bad.string()).exit_code == 1);
    CHECK(run("certify unknown-mode " + example1.string()).exit_code == 1);
}

TEST_CASE("certify reports re-verify through verify-only") {
    const fs::path dir = scratch_dir();
    const fs::path example1 = dir / "example1v.json";
    const fs::path report = dir / "report.json";
    REQUIRE(run("construct minimal-gupb --shape 2,2 --output " + example1.string()).exit_code ==
            0);
    REQUIRE(run("certify locc-unambiguous " + example1.string() + " --seed 5 --output " +
                report.string())
                .exit_code == 0);
    CHECK(run("certify verify-only " + report.string()).exit_code == 0);

    // Corrupt one certificate: replace it with a state that overlaps |++>.
    nlohmann::json doc;
    std::ifstream(report) >> doc;
    doc["members"][0]["certificate"]["amplitudes"] = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                                                      {0.0, 0.0}};
    const fs::path corrupted = dir / "corrupted.json";
    std::ofstream(corrupted) << doc.dump();
    CHECK(run("certify verify-only " + corrupted.string()).exit_code == 3);
    CHECK(run("certify verify-only " + example1.string()).exit_code == 1);
}

TEST_CASE("reciprocal emits the dual set with an analysis block") {
    const fs::path dir = scratch_dir();
    const fs::path example2 = dir / "example2.json";
    REQUIRE(run("construct example2 --output " + example2.string()).exit_code == 0);
    const RunResult result = run("reciprocal " + example2.string() + " --seed 2");
    REQUIRE(result.exit_code == 0);
    const ubkit::StateSet dual = ubkit::state_set_from_json_text(result.output);
    CHECK(dual.size() == 4);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["analysis"]["is_ipb"] == true);
    CHECK(doc["analysis"]["distinguishable"] == false);

    const fs::path deficient = dir / "deficient.json";
    REQUIRE(run("construct minimal-gupb --shape 2,2 --output " + deficient.string()).exit_code ==
            0);
    CHECK(run("reciprocal " + deficient.string()).exit_code == 1);
}

TEST_CASE("seed handling is deterministic and env-driven") {
    const fs::path dir = scratch_dir();
    const fs::path ghz = dir / "ghz_seed.json";
    REQUIRE(run("construct ghz-triple --k 2 --x 01 --output " + ghz.string()).exit_code == 0);

    const std::string base = "certify locc-unambiguous " + ghz.string();
    const RunResult a = run(base + " --seed 42");
    const RunResult b = run(base + " --seed 42");
    CHECK(a.output == b.output);

    const RunResult env_a = run_raw("env UBKIT_SEED=9 " + std::string(UBKIT_BIN_PATH) + " " +
                                    base + " 2>/dev/null");
    const RunResult env_b = run(base + " --seed 9");
    CHECK(env_a.output == env_b.output);
}

TEST_CASE("demo example1 passes end to end") {
    const RunResult result = run("demo example1 --seed 3");
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["verdict"] == "pass");
}

TEST_SUITE_END();
