#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "planepart/inequality_lab.hpp"
#include "planepart/serialize.hpp"

using namespace planepart;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("PLANEPART_BIN");
    return p ? p : "";
}

RunResult run_cli(const std::string& args) {
    RunResult r{-1, {}};
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("report csv and json carry identical records", "[serialize]") {
    PPTable t = pp_exact(30);
    IneqReport r = verify_bo_pp(t, 12, 30);

    nlohmann::json j = report_to_json(r);
    REQUIRE(j["schema"] == "planepart-report v1");
    std::string csv = report_to_csv(r);

    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "i,j,verdict,witness");
    std::size_t idx = 0;
    std::string line;
    while (std::getline(lines, line)) {
        REQUIRE(idx < j["entries"].size());
        const auto& je = j["entries"][idx];
        std::istringstream fields(line);
        std::string i, jj, verdict, witness;
        std::getline(fields, i, ',');
        std::getline(fields, jj, ',');
        std::getline(fields, verdict, ',');
        std::getline(fields, witness);
        REQUIRE(std::stol(i) == je["i"].get<long>());
        if (je.contains("j")) REQUIRE(std::stol(jj) == je["j"].get<long>());
        REQUIRE(verdict == je["verdict"].get<std::string>());
        if (je.contains("witness")) REQUIRE(witness == je["witness"].get<std::string>());
        ++idx;
    }
    REQUIRE(idx == j["entries"].size());
}

TEST_CASE("cli prints the first pp row exactly", "[cli]") {
    auto r = run_cli("table pp --max 10");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("1  1  3  6  13  24  48  86  160  282  500") != std::string::npos);
}

TEST_CASE("cli verification sweeps exit clean on the claimed regions", "[cli]") {
    REQUIRE(run_cli("verify bo-pp --sum-min 12 --sum-max 60").exit_code == 0);
    REQUIRE(run_cli("verify logconcave-pp --n-min 2 --n-max 30").exit_code == 0);
    REQUIRE(run_cli("verify step-bound --max 100").exit_code == 0);
    REQUIRE(run_cli("verify monotone --max 12 --x 1").exit_code == 0);
    REQUIRE(run_cli("verify even-coeffs --a-max 12").exit_code == 0);
}

TEST_CASE("cli zeros grid shows the reference corner", "[cli]") {
    auto r = run_cli("zeros bo --a-max 3 --b-max 3 --decimals 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("5.0") != std::string::npos);
    REQUIRE(r.out.find("3.2") != std::string::npos);
    REQUIRE(r.out.find("3.0") != std::string::npos);
}

TEST_CASE("cli final-step bound reports its threshold", "[cli]") {
    auto r = run_cli("bounds final-step --kind grad7");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("a >= 7") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs and jobs", "[cli]") {
    auto a = run_cli("zeros bo --a-max 4 --b-max 4 --decimals 1");
    auto b = run_cli("zeros bo --a-max 4 --b-max 4 --decimals 1");
    auto c = run_cli("zeros bo --a-max 4 --b-max 4 --decimals 1 --jobs 3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out == c.out);
}

TEST_CASE("cli csv and json forms of one sweep agree", "[cli]") {
    auto csv = run_cli("--format csv verify logconcave-pp --n-min 2 --n-max 15");
    auto json = run_cli("--format json verify logconcave-pp --n-min 2 --n-max 15");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    std::istringstream lines(csv.out);
    std::string header, line;
    std::getline(lines, header);
    std::size_t idx = 0;
    while (std::getline(lines, line)) {
        const auto& je = j["entries"][idx];
        std::istringstream fields(line);
        std::string i, jj, verdict;
        std::getline(fields, i, ',');
        std::getline(fields, jj, ',');
        std::getline(fields, verdict, ',');
        REQUIRE(std::stol(i) == je["i"].get<long>());
        REQUIRE(verdict == je["verdict"].get<std::string>());
        ++idx;
    }
    REQUIRE(idx == j["entries"].size());
}

TEST_CASE("cli cache lifecycle", "[cli]") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "planepart_cli_cache_test";
    fs::remove_all(dir);

    auto build = run_cli("--cache-dir " + dir.string() + " cache build --max 64");
    REQUIRE(build.exit_code == 0);
    REQUIRE(fs::exists(dir / "pp-64.txt"));

    auto info = run_cli("--cache-dir " + dir.string() + " cache info");
    REQUIRE(info.exit_code == 0);
    REQUIRE(info.out.find("# N=64") != std::string::npos);

    auto verify = run_cli("cache verify --file " + (dir / "pp-64.txt").string());
    REQUIRE(verify.exit_code == 0);
    REQUIRE(verify.out.find("OK") != std::string::npos);

    // a cached table is picked up instead of recomputation
    auto use = run_cli("--cache-dir " + dir.string() + " table pp --max 10");
    REQUIRE(use.exit_code == 0);
    REQUIRE(use.out.find("500") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("cli figure export lists conjugate pairs", "[cli]") {
    auto r = run_cli("zeros cft --emit-complex --a-max 5 --b-min 2 --b-max 2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("a,b,re,im,kind", 0) == 0);
    // Delta_{5,2} has one complex-conjugate pair with positive real part
    std::size_t complex_rows = 0;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    double im_sum = 0;
    while (std::getline(lines, line)) {
        if (line.find(",complex") != std::string::npos) {
            ++complex_rows;
            auto p1 = line.find(',', line.find(',', line.find(',') + 1) + 1);
            im_sum += std::stod(line.substr(p1 + 1));
        }
    }
    REQUIRE(complex_rows == 2);
    REQUIRE(std::abs(im_sum) < 1e-12);

    auto t = run_cli("zeros turan --emit-complex --a-max 2");
    REQUIRE(t.exit_code == 0);
    REQUIRE(t.out.find("2,0,5,0,real") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2", "[cli]") {
    REQUIRE(run_cli("no-such-command").exit_code == 2);
    REQUIRE(run_cli("table pp --max notanumber").exit_code == 2);
    REQUIRE(run_cli("verify monotone --max 5 --x 1/2").exit_code == 2);
}
