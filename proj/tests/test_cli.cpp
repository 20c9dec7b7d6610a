#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmorder/cli.hpp"
#include "gmorder/errors.hpp"
#include "gmorder/scenario_io.hpp"

using namespace gmorder;
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

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "gmorder_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

const char* kSt1 = R"({"A": {"members": [{"alpha": 0.2, "beta": 2}, {"alpha": 0.1, "beta": 1}], "lambda_scalar": 0.6},
 "B": {"members": [{"alpha": 0.18, "beta": 2}, {"alpha": 0.12, "beta": 1}], "lambda_scalar": 0.6},
 "relation": "st", "extreme": "max"})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
    auto r = run({"eval", "--alpha", "0.1", "--beta", "0.2", "--lambda", "0.6", "--at", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "x,hazard,survival,cdf,pdf\n0,0.69999999999999996,1,0,0.69999999999999996\n");
    r = run({"eval", "--alpha", "0.1", "--beta", "0.2", "--lambda", "0.6", "--quantile", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "q,x\n0,0\n");
    CHECK(run({"eval", "--alpha", "0.1", "--beta", "0.2", "--lambda", "0.6", "--at", "-1"}).code == 64);
    CHECK(run({"eval", "--alpha", "0.1", "--beta", "0.2", "--lambda", "0.6", "--quantile", "1"}).code == 64);
    CHECK(run({"eval", "--alpha", "0", "--beta", "0.2", "--lambda", "0.6", "--at", "1"}).code == 64);
    CHECK(run({"eval", "--alpha", "0.1"}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
}

TEST_CASE("check") {
    const auto st1 = write("st1.json", kSt1);
    const auto csv = (scratch() / "st1.csv").string();
    auto r = run({"check", st1, "--emit", csv});
    CHECK(r.code == 1);
    std::ifstream in(csv);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("x,F_A,F_B,F_A-F_B\n", 0) == 0);
    const auto rows = csv_rows(ss.str());
    CHECK(rows.size() == 2000);
    int changes = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] > rows[i - 1][0]);
        const double a = rows[i - 1][3], b = rows[i][3];
        if (std::abs(a) > 1e-12 && std::abs(b) > 1e-12 && (a < 0) != (b < 0)) ++changes;
    }
    CHECK(changes >= 1);

    const auto same = write("same.json", R"({"A": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]},
        "B": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]}, "relation": "hr"})");
    CHECK(run({"check", same}).code == 0);
    CHECK(run({"check", same, "--grid-points", "100", "--grid-log"}).code == 0);
    CHECK(run({"check", same, "--grid-min", "5", "--grid-max", "1"}).code == 64);

    CHECK(run({"check", write("bad.json", "{\"A\": [")}).code == 65);
    CHECK(run({"check", write("neg.json", R"({"A": {"members": [{"alpha": -1, "beta": 1, "lambda": 1}]},
        "B": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]}, "relation": "st"})")}).code == 65);
    CHECK(run({"check", write("norel.json", R"({"A": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]},
        "B": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]}})")}).code == 65);
    CHECK(run({"check", write("typo.json", R"({"A": {"members": [{"alpha": 1, "beta": 1, "lamda": 1}]},
        "B": {"members": [{"alpha": 1, "beta": 1, "lambda": 1}]}, "relation": "st"})")}).code == 65);
    CHECK(run({"check", (scratch() / "missing.json").string()}).code == 65);
}

TEST_CASE("verify") {
    auto a = run({"verify", "--theorem", "T6", "--trials", "50", "--seed", "1", "--n", "2"});
    CHECK(a.code == 0);
    auto b = run({"verify", "--theorem", "T6", "--trials", "50", "--seed", "1", "--n", "2"});
    CHECK(a.out == b.out);
    auto c = run({"verify", "--theorem", "T6", "--trials", "50", "--seed", "1", "--n", "2",
                  "--threads", "8"});
    CHECK(a.out == c.out);
    CHECK(run({"verify", "--theorem", "T99"}).code == 64);
    CHECK(run({"verify", "--theorem", "T4", "--trials", "0"}).code == 64);
    CHECK(run({"verify", "--theorem", "T4", "--n", "1"}).code == 64);
    CHECK(run({"verify", "--theorem", "T22", "--trials", "5"}).code == 1);

    const auto s = write("t4.json", R"({"A": {"members": [{"alpha": 3, "beta": 1, "lambda": 1},
        {"alpha": 1, "beta": 0.5, "lambda": 1}]}, "B": {"members": [{"alpha": 2, "beta": 1, "lambda": 1},
        {"alpha": 2, "beta": 0.5, "lambda": 1}]}, "branch": "D+"})");
    auto r = run({"verify", "--theorem", "T4", "--scenario", s});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["outcome"] == "HOLDS");
    CHECK(run({"verify", "--theorem", "T12", "--scenario", s}).code == 2);
}

TEST_CASE("counterexample") {
    auto r = run({"counterexample", "--id", "CE-MIN-LR-A"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    bool up = false, down = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][3] > rows[i - 1][3] * (1 + 1e-9)) up = true;
        if (rows[i][3] < rows[i - 1][3] * (1 - 1e-9)) down = true;
    }
    CHECK(up);
    CHECK(down);
    CHECK(run({"counterexample", "--id", "CE-MAX-RH-2"}).code == 0);
    CHECK(run({"counterexample", "--id", "bogus"}).code == 64);
}

}
