#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command =
        std::string(POLYCIRC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string chip_config() {
    return std::string(POLYCIRC_SOURCE_DIR) + "/configs/chip.cfg";
}

std::filesystem::path write_temp_config(const std::string& name,
                                        const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("report runs on the shipped config") {
    const auto result =
        run_cli("report --config " + chip_config() + " --format structured");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("qubit.meander.E01_over_h") != std::string::npos);
    CHECK(result.output.find("qubit.jj.E01_over_h") != std::string::npos);
    CHECK(result.output.find("report.kappa") != std::string::npos);
    CHECK(result.output.find("GHz") != std::string::npos);
}

TEST_CASE("report table format") {
    const auto result = run_cli("report --config " + chip_config());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("meander") != std::string::npos);
    CHECK(result.output.find("kappa") != std::string::npos);
}

TEST_CASE("missing config file exits with the config code") {
    const auto result = run_cli("report --config /does/not/exist.cfg");
    CHECK(result.exit_code == 2);
}

TEST_CASE("malformed config exits with the config code") {
    const auto path = write_temp_config("polycirc_bad.cfg", R"(
[qubit broken]
capacitance = 118.1 fF
)");
    const auto result = run_cli("report --config " + path.string());
    CHECK(result.exit_code == 2);
}

TEST_CASE("non-dispersive detuning exits with the numerical code") {
    // resonator tuned onto the qubit transition
    const auto path = write_temp_config("polycirc_resonant.cfg", R"(
[resonator hot]
inductance = 2.4 nH
capacitance = 2450.7 fF

[qubit collider]
capacitance = 118.1 fF
inductance = 18.2 nH
coupling_capacitance = 3.08 fF
resonator = hot
)");
    const auto result = run_cli("report --config " + path.string());
    CHECK(result.exit_code == 3);
}

TEST_CASE("arcsin potential report carries both alpha routes") {
    const auto result =
        run_cli("report --config " + std::string(POLYCIRC_SOURCE_DIR) +
                "/configs/arcsin.cfg --format structured");
    CHECK(result.exit_code == 0);
    // exact diagonalization and the continuum perturbative value side by side
    CHECK(result.output.find("qubit.meander_arcsin.alpha_over_h") !=
          std::string::npos);
    CHECK(result.output.find("qubit.meander_arcsin.alpha_pert_over_h") !=
          std::string::npos);
    CHECK(result.output.find("fourier_truncation_note") != std::string::npos);
}

TEST_CASE("curve emits one row per ratio") {
    const auto one = run_cli("curve --ratios 54.9");
    CHECK(one.exit_code == 0);
    CHECK(count_lines(one.output) == 2);  // header + row
    CHECK(one.output.find("ratio,delta0,delta1,delta2,alpha_over_Ec") !=
          std::string::npos);
    CHECK(one.output.find("54.9") != std::string::npos);

    const auto few = run_cli("curve --ratios 1:5:1 --jobs 3");
    CHECK(few.exit_code == 0);
    CHECK(count_lines(few.output) == 6);

    const auto bad = run_cli("curve --ratios ''");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("tline output carries the mode anharmonicity") {
    const auto result = run_cli("tline --config " + chip_config());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("tline.jtwpa.alpha_over_h = -109.1866") !=
          std::string::npos);
    CHECK(result.output.find("traveling-wave") != std::string::npos);
}

TEST_CASE("classical runs report drift and frequency") {
    const auto result = run_cli("classical --config " + chip_config());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("classical.lc.measured_frequency = 3.43") !=
          std::string::npos);
    CHECK(result.output.find("classical.lc.energy_drift_max") !=
          std::string::npos);
    CHECK(result.output.find("classical.pendulum.measured_frequency") !=
          std::string::npos);
}

TEST_CASE("sweep writes sorted rows") {
    const auto result = run_cli("sweep --config " + chip_config());
    CHECK(result.exit_code == 0);
    CHECK(count_lines(result.output) == 7);  // header + 6 offsets
    CHECK(result.output.find("ng,E01_GHz,alpha_MHz,n01") != std::string::npos);
}

TEST_CASE("outputs land in the requested directory") {
    const auto out_dir =
        std::filesystem::temp_directory_path() / "polycirc_cli_out";
    std::filesystem::remove_all(out_dir);
    const auto result = run_cli("report --config " + chip_config() +
                                " --format csv --out " + out_dir.string());
    CHECK(result.exit_code == 0);
    CHECK(std::filesystem::exists(out_dir / "report.csv"));
    std::filesystem::remove_all(out_dir);
}

TEST_SUITE_END();
