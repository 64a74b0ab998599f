#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct run_result {
    int code = -1;
    std::string out;
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(RNDF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    run_result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("eval subcommand") {
    auto r = run_cli("eval --t 0");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(std::abs(j["re"].get<double>()) <= 1e-8);
    CHECK(std::abs(j["im"].get<double>()) <= 1e-8);
    CHECK(j["err_bound"].get<double>() <= 1e-8);

    auto r2 = run_cli("eval --x 1 --tol 1e-8");
    CHECK(r2.code == 0);
    json j2 = json::parse(r2.out);
    CHECK(std::abs(j2["im"].get<double>() - 0.15915494309189535) <= 1e-7);

    // mutually exclusive flags
    CHECK(run_cli("eval --t 0 --x 1").code == 2);
    CHECK(run_cli("eval").code == 2);
    CHECK(run_cli("eval --t 0 --tol -1").code == 2);
}

TEST_CASE("classify subcommand") {
    auto r = run_cli("classify 1/6");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["klass"] == "spiral");
    CHECK(j["q_tilde"] == 3);
    CHECK(run_cli("classify 2/4").code == 2);
    CHECK(run_cli("classify x").code == 2);
}

TEST_CASE("probe subcommand") {
    auto r = run_cli("probe --rational 1/8");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "CornerMismatch");
    CHECK(std::abs(j["angle_diff"].get<double>() - 1.5707963267948966) <= 2e-2);

    auto r2 = run_cli("probe --rational 1/2");
    CHECK(r2.code == 0);
    CHECK(json::parse(r2.out)["verdict"] == "SpiralSweep");
}

TEST_CASE("cf subcommand") {
    auto r = run_cli("cf pi-3 --n 4");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    auto pq = j["partial_quotients"];
    REQUIRE(pq.size() >= 4);
    CHECK(pq[0] == 7);
    CHECK(pq[1] == 15);
    CHECK(pq[2] == 1);
    CHECK(pq[3] == 292);
    bool has_1_7 = false, has_16_113 = false;
    for (const auto& cv : j["convergents"]) {
        if (cv["p"] == "1" && cv["q"] == "7") has_1_7 = true;
        if (cv["p"] == "16" && cv["q"] == "113") has_16_113 = true;
    }
    CHECK(has_1_7);
    CHECK(has_16_113);
}

TEST_CASE("plot subcommand with deterministic output") {
    std::string csv1 = "/tmp/rndf_test_plot1.csv";
    std::string csv2 = "/tmp/rndf_test_plot2.csv";
    auto r1 = run_cli("plot --from 0 --to 0.01 --n 101 --format csv --tol 1e-6 --out " + csv1);
    auto r2 = run_cli("plot --from 0 --to 0.01 --n 101 --format csv --tol 1e-6 --out " + csv2);
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    std::string a = slurp(csv1), b = slurp(csv2);
    CHECK(!a.empty());
    CHECK(a == b); // byte-identical across runs
    CHECK(a.substr(0, 12) == "param,re,im\n");

    std::string svg = "/tmp/rndf_test_plot.svg";
    auto r3 = run_cli("plot --from 0 --to 0.159154943091895 --n 2001 --tol 1e-6 --format svg --out " + svg);
    CHECK(r3.code == 0);
    std::string body = slurp(svg);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("<path") != std::string::npos);
    // single path element
    CHECK(body.find("<path", body.find("<path") + 1) == std::string::npos);

    // unwritable output -> I/O failure
    CHECK(run_cli("plot --from 0 --to 0.01 --n 11 --format csv --tol 1e-5 --out /nonexistent-dir/x.csv").code == 3);
    std::remove(csv1.c_str());
    std::remove(csv2.c_str());
    std::remove(svg.c_str());
}

TEST_CASE("dim subcommand on a reduced grid") {
    auto r = run_cli("dim --n 1048577 --eps-lo 2e-3 --eps-hi 2e-2 --levels 9 --tol 1e-8");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    double slope = j["slope"].get<double>();
    CHECK(slope >= 1.0);
    CHECK(slope <= 1.45);
}

TEST_CASE("inconclusive probes exit with code 4") {
    // a double input that resolves to an impractically deep rational
    auto r = run_cli("probe --x 0.73124598234098");
    CHECK(r.code == 4);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "inconclusive");
}
