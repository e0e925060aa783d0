#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "perdet/cli.hpp"
#include "perdet/io.hpp"
#include "perdet/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace perdet;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the installed CLI binary; stderr is folded into the captured stream.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PERDET_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("perdet_cli_" + name);
    std::ofstream f(path);
    f << content;
    return path.string();
}

std::string matrix_file(const std::string& name, const SquareMatrix& a) {
    std::ostringstream os;
    write_matrix(os, a);
    return write_temp(name, os.str());
}

} // namespace

TEST_CASE("check command and exit statuses") {
    const std::string stable = matrix_file("stable6.txt", fixtures::stable6());
    auto holds = run_cli("check --input " + stable);
    CHECK(holds.status == kExitHolds);
    CHECK(holds.out.find("holds") != std::string::npos);

    const std::string ones = matrix_file("ones2.txt", SquareMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(run_cli("check --input " + ones).status == kExitFails);

    const std::string zero = matrix_file("zero3.txt", SquareMatrix(3));
    auto inap = run_cli("check --input " + zero);
    CHECK(inap.status == kExitInapplicable);
    CHECK(inap.out.find("zero block") != std::string::npos);

    const std::string bad = write_temp("bad.txt", "2\n1 2\n3 x\n");
    auto parse = run_cli("check --input " + bad);
    CHECK(parse.status == kExitParseError);
    CHECK(parse.out.find("3:3") != std::string::npos);

    CHECK(run_cli("check --input does_not_exist.txt").status == kExitParseError);

    // dimension line disagreeing with the row count
    const std::string short_rows = write_temp("short.txt", "3\n1 2 3\n4 5 6\n");
    CHECK(run_cli("check --input " + short_rows).status == kExitParseError);

    // tiny cycle cap forces the undecided path
    const std::string dense =
        matrix_file("dense3.txt", SquareMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    CHECK(run_cli("check --input " + dense + " --cycle-cap 1").status == kExitCapExceeded);
}

TEST_CASE("structured output round trips") {
    const std::string stable = matrix_file("stable6b.txt", fixtures::stable6());
    auto text = run_cli("check --input " + stable);
    auto structured = run_cli("check --format structured --input " + stable);
    CHECK(structured.status == kExitHolds);

    const auto doc = nlohmann::json::parse(structured.out);
    CHECK(doc.at("command") == "check");
    const Verdict v = verdict_from_json(doc.at("verdict"));
    CHECK(v.decision == Decision::holds);
    CHECK(verdict_to_text(v) == text.out);
    // every displayed fact is recoverable from the structured report
    CHECK(text.out.find(v.tau->cycle_string()) != std::string::npos);
    CHECK(text.out.find(to_string(v.oracle_checks.at(0).per)) != std::string::npos);
}

TEST_CASE("check-powers and oracle commands") {
    const std::string stable = matrix_file("stable6c.txt", fixtures::stable6());
    CHECK(run_cli("check-powers --input " + stable).status == kExitHolds);

    const std::string unstable = matrix_file("unstable3.txt", fixtures::unstable3());
    CHECK(run_cli("check-powers --input " + unstable).status == kExitFails);

    auto table = run_cli("oracle --kmax 2 --input " + unstable);
    CHECK(table.status == kExitFails);
    CHECK(table.out.find("16") != std::string::npos);
    CHECK(run_cli("oracle --kmax 3 --input " + stable).status == kExitHolds);
}

TEST_CASE("find-tau command") {
    const std::string stable = matrix_file("stable6d.txt", fixtures::stable6());
    auto found = run_cli("find-tau --input " + stable);
    CHECK(found.status == kExitHolds);
    CHECK(found.out.find("(142)(356)") != std::string::npos);

    const std::string zero = matrix_file("zero2.txt", SquareMatrix(2));
    auto missing = run_cli("find-tau --input " + zero);
    CHECK(missing.status == kExitFails);
    CHECK(missing.out.find("zero block") != std::string::npos);
}

TEST_CASE("cycles command") {
    const std::string p8 = matrix_file("p8.txt", perm_matrix(fixtures::cycle8()));
    auto cycles = run_cli("cycles --input " + p8);
    CHECK(cycles.status == kExitFails); // even dicycles exist
    CHECK(cycles.out.find("(1 4 3 2)") != std::string::npos);
    CHECK(cycles.out.find("(5 8 7 6)") != std::string::npos);
    CHECK(cycles.out.find("2 even, 0 odd") != std::string::npos);

    const std::string tri =
        matrix_file("tri3.txt", perm_matrix(Permutation::from_cycles(3, {{1, 2, 3}})));
    CHECK(run_cli("cycles --input " + tri).status == kExitHolds);
}

TEST_CASE("triangularize command") {
    const std::string stable = matrix_file("stable6e.txt", fixtures::stable6());
    auto ok = run_cli("triangularize --format structured --input " + stable);
    CHECK(ok.status == kExitHolds);
    const auto doc = nlohmann::json::parse(ok.out);
    const Verdict v = verdict_from_json(doc.at("verdict"));
    REQUIRE(v.row_perm.has_value());
    const SquareMatrix t = perm_matrix(*v.row_perm) * fixtures::stable6() * perm_matrix(*v.col_perm);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j < i; ++j) CHECK(t.at(i, j) == 0);

    const std::string ones = matrix_file("ones2b.txt", SquareMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(run_cli("triangularize --input " + ones).status == kExitFails);
}

TEST_CASE("pattern command") {
    std::ostringstream os;
    write_pattern(os, fixtures::star_pattern5());
    const std::string gamma = write_temp("gamma5.txt", os.str());
    CHECK(run_cli("pattern --trials 5 --seed 1 --input " + gamma).status == kExitHolds);

    const std::string dense = write_temp("dense_star.txt", "3 zerostar\n***\n***\n***\n");
    CHECK(run_cli("pattern --trials 3 --input " + dense).status == kExitFails);

    const std::string bad = write_temp("bad_pattern.txt", "2 sign\n+*\n00\n");
    CHECK(run_cli("pattern --input " + bad).status == kExitParseError);
}

TEST_CASE("counterexample command") {
    auto r = run_cli("counterexample");
    CHECK(r.status == kExitHolds);
    CHECK(r.out.find("(1234)(5678)") != std::string::npos);
    CHECK(r.out.find("per(P_sigma) = 1") != std::string::npos);

    auto structured = run_cli("counterexample --format structured");
    const auto doc = nlohmann::json::parse(structured.out);
    CHECK(doc.at("report").at("per") == "1");
    CHECK(doc.at("report").at("dicycles").size() == 2);
}
