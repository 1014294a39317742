#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "iondec/cli.hpp"
#include "iondec/matter_db.hpp"

using namespace iondec;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / ("iondec_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("table for one salt") {
    const auto r = run({"table", "--salts", "NaCl", "--format", "csv", "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == cli::kExitOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "salt,tau1_1e-40s,tau2_1e-38s,tau1_s,tau2_s");
    CHECK(l[1].rfind("NaCl,4.6,4.4,", 0) == 0);
}

TEST_CASE("table for all salts keeps the published order") {
    const auto r = run({"table", "--format", "csv", "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 17);
    for (std::size_t i = 0; i < 16; ++i) CHECK(l[i + 1].rfind(table1_order()[i] + ",", 0) == 0);

    // Explicit selections are reordered too.
    const auto sel = lines(run({"table", "--salts", "PbS,NaF", "--format", "csv", "--data", IONDEC_TEST_DATA}).out);
    REQUIRE(sel.size() == 3);
    CHECK(sel[1].rfind("NaF,", 0) == 0);
    CHECK(sel[2].rfind("PbS,", 0) == 0);
}

TEST_CASE("unknown salt fails without output rows") {
    const auto r = run({"table", "--salts", "Unobtainium", "--data", IONDEC_TEST_DATA});
    CHECK(r.code == cli::kExitValidation);
    CHECK(r.out.empty());
    CHECK(r.err.find("NaCl") != std::string::npos);
}

TEST_CASE("data file errors exit with 2") {
    const auto dir = temp_dir();
    const auto bad = dir / "bad.csv";
    std::ofstream(bad) << "NaCl,Na+,22.990,Cl-,35.453,-1,5.64,10,4.6,4.4\n";
    CHECK(run({"table", "--data", bad.string()}).code == cli::kExitDataFile);
    CHECK(run({"table", "--data", (dir / "missing.csv").string()}).code == cli::kExitDataFile);
    fs::remove_all(dir);
}

TEST_CASE("data file precedence: flag, environment, bundled") {
    const auto dir = temp_dir();
    std::ofstream(dir / cli::kDataFileName) << "KF,K+,39.098,F-,18.998,2520,5.35,4,5.1,5.2\n";
    ::setenv(cli::kDataDirEnv, dir.string().c_str(), 1);
    CHECK(cli::resolve_data_file("") == dir / cli::kDataFileName);
    CHECK(cli::resolve_data_file("x.csv") == fs::path("x.csv"));
    const auto env_rows = lines(run({"table", "--format", "csv"}).out);
    CHECK(env_rows.size() == 2);
    const auto flag_rows = lines(run({"table", "--format", "csv", "--data", IONDEC_TEST_DATA}).out);
    CHECK(flag_rows.size() == 17);
    ::unsetenv(cli::kDataDirEnv);
    CHECK(lines(run({"table", "--format", "csv"}).out).size() == 17);
    fs::remove_all(dir);
}

TEST_CASE("json output is deterministic and round-trips") {
    const std::vector<std::string> args = {"table", "--format", "json", "--data", IONDEC_TEST_DATA};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["rows"].size() == 16);
    const auto& nacl = j["rows"][1];
    CHECK(nacl["salt"] == "NaCl");
    CHECK(nacl["tau1_1e-40s"].get<double>() == 4.6);
    // Full precision survives the text round trip.
    const auto csv = lines(run({"table", "--salts", "NaCl", "--format", "csv", "--data", IONDEC_TEST_DATA}).out);
    CHECK(csv[1].substr(csv[1].rfind(',') + 1) == cli::format_shortest(nacl["tau2_s"].get<double>()));
}

TEST_CASE("factor command") {
    const auto r = run({"factor", "--dx", "0", "--t", "1e-30", "--format", "csv", "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[1].substr(lines(r.out)[1].rfind(',') + 1) == "1");
    const auto j = nlohmann::json::parse(
        run({"factor", "--dx", "1e-8", "--t", "1e-16", "--lambda", "3e-11", "--rate", "2e16", "--format", "json"}).out);
    CHECK(j["factor"].get<double>() == doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
    CHECK(run({"factor", "--dx", "1e-10", "--t", "-1", "--data", IONDEC_TEST_DATA}).code == cli::kExitValidation);
    CHECK(run({"factor", "--t", "1"}).code == cli::kExitValidation);
}

TEST_CASE("xray command") {
    const auto r = run({"xray", "--salt", "NaCl", "--tau-x", "0.5e-18", "--format", "json", "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["implied_nx_kg_m3"].get<double>() == doctest::Approx(1.995e-18).epsilon(1e-3));
    const double spacing = j["implied_spacing_m"].get<double>();
    CHECK(spacing > 1e-3);
    CHECK(spacing < 1e-2);
}

TEST_CASE("bcs command") {
    const auto r = run({"bcs", "--uniform-u", "0.9", "--modes", "100", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[1].rfind("100,2.656", 0) == 0);
    const auto j = nlohmann::json::parse(run({"bcs", "--format", "json"}).out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["slope"].get<double>() == doctest::Approx(-0.7984378523711685).epsilon(1e-9));
    CHECK(run({"bcs", "--uniform-u", "1.5", "--modes", "3"}).code == cli::kExitValidation);
}

TEST_CASE("classify command") {
    const auto r = run({"classify", "--salt", "NaCl", "--tau-dyn", "1", "--coherent-phase", "--format", "json",
                        "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "QftRegimeIndicated");
    CHECK(j["threshold_ratio"].get<double>() == 1e3);
    const auto c = nlohmann::json::parse(
        run({"classify", "--tau1", "1", "--tau2", "2", "--tau-dyn", "1e6", "--format", "json"}).out);
    CHECK(c["verdict"] == "ClassicalLimit");
    CHECK(run({"classify", "--tau1", "1", "--tau2", "2"}).code == cli::kExitValidation);
    CHECK(run({"classify", "--tau1", "1", "--tau2", "2", "--tau-dyn", "1", "--threshold", "0.5"}).code ==
          cli::kExitValidation);
}

TEST_CASE("sim command emits one row per step") {
    const auto r = run({"sim", "--points", "64", "--steps", "5", "--format", "csv", "--data", IONDEC_TEST_DATA});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 7);
    CHECK(l[0] == "time_s,coherence_ratio,trace,min_eigenvalue");
    CHECK(run({"sim", "--separation-lambda", "100", "--width-lambda", "1", "--data", IONDEC_TEST_DATA}).code ==
          cli::kExitValidation);
}

TEST_CASE("output file written only on success") {
    const auto dir = temp_dir();
    const auto ok = dir / "ok.csv";
    CHECK(run({"table", "--salts", "NaCl", "--format", "csv", "-o", ok.string(), "--data", IONDEC_TEST_DATA}).code == 0);
    std::ifstream in(ok);
    std::string header;
    std::getline(in, header);
    CHECK(header == "salt,tau1_1e-40s,tau2_1e-38s,tau1_s,tau2_s");

    const auto failed = dir / "failed.csv";
    CHECK(run({"table", "--salts", "Nope", "-o", failed.string(), "--data", IONDEC_TEST_DATA}).code != 0);
    CHECK_FALSE(fs::exists(failed));
    fs::remove_all(dir);
}

TEST_CASE("number formatting ignores locale") {
    CHECK(cli::format_fixed(4.6117, 1) == "4.6");
    CHECK(cli::format_fixed(12.05, 1) == "12.1");
    CHECK(cli::format_shortest(0.1) == "0.1");
    CHECK(std::stod(cli::format_shortest(4.611712156005868e-40)) == 4.611712156005868e-40);
}

TEST_CASE("parse errors and help") {
    CHECK(run({}).code == cli::kExitValidation);
    CHECK(run({"frobnicate"}).code == cli::kExitValidation);
    CHECK(run({"table", "--format", "xml"}).code == cli::kExitValidation);
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("table") != std::string::npos);
}
