#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "amen/harness.hpp"

using namespace amen;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path cap = fs::temp_directory_path() / ("amen-cli-out-" + std::to_string(counter++));
    std::string cmd = std::string(AMEN_CLI_PATH) + " " + args + " > " + cap.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(cap);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(cap);
    return r;
}

fs::path write_temp(const Algebra& a, const std::string& name) {
    fs::path p = fs::temp_directory_path() / name;
    save_algebra(a, p.string());
    return p;
}

}  // namespace

TEST_CASE("validate accepts the corpus and rejects corruption") {
    fs::path good = write_temp(pointwise_algebra(2), "cli-good.json");
    CHECK(run_cli("validate " + good.string()).exit_code == 0);

    // break associativity
    Json j;
    {
        std::ifstream in(good);
        j = Json::parse(in);
    }
    j["table"][0][1][1] = "1";
    fs::path bad = fs::temp_directory_path() / "cli-bad.json";
    std::ofstream(bad) << j.dump(2);
    RunResult r = run_cli("validate " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("(i,j,k,l)") != std::string::npos);

    RunResult r2 = run_cli("validate /nonexistent/file.json");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("validate names a bad declared character") {
    Algebra a = pointwise_algebra(2);
    a.set_declared_characters({{{Rational(1), Rational(2)}}, false});
    fs::path p = write_temp(a, "cli-badchar.json");
    RunResult r = run_cli("validate " + p.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("character 0") != std::string::npos);
}

TEST_CASE("analyze emits the full report") {
    fs::path p = write_temp(truncated_polynomial_algebra(2), "cli-dual.json");
    RunResult r = run_cli("analyze " + p.string());
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("verdicts").at("weakly_amenable") == "false");
    CHECK(j.at("verdicts").at("cyclically_amenable") == "true");
    CHECK(j.at("verdicts").at("point_amenable") == "false");
    CHECK(j.at("dims").at("derivation") == 1);
    CHECK(j.at("dims").at("inner") == 0);
    CHECK(j.at("field") == "Q");
    CHECK(j.at("tool") == "amen");
}

TEST_CASE("analyze is byte-stable across runs") {
    fs::path p = write_temp(upper_triangular_algebra(2), "cli-t2.json");
    RunResult r1 = run_cli("analyze " + p.string());
    RunResult r2 = run_cli("analyze " + p.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("characters subcommand lists the canonical set") {
    fs::path p = write_temp(group_algebra_c2(), "cli-c2.json");
    RunResult r = run_cli("characters " + p.string());
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.at("values").size() == 2);
    CHECK(j.at("complete") == true);
    CHECK(j.at("values")[0][1] == "-1");
}

TEST_CASE("construct sum and round-trip through analyze") {
    fs::path q = write_temp(scalar_algebra(), "cli-q.json");
    fs::path out = fs::temp_directory_path() / "cli-sum.json";
    RunResult r = run_cli("construct sum " + q.string() + " " + q.string() + " -o " + out.string());
    REQUIRE(r.exit_code == 0);
    Algebra s = load_algebra(out.string());
    CHECK(s.dim() == 2);
    CHECK(s.table() == pointwise_algebra(2).table());

    RunResult a = run_cli("analyze " + out.string());
    REQUIRE(a.exit_code == 0);
    Json j = Json::parse(a.out);
    CHECK(j.at("verdicts").at("weakly_amenable") == "true");
}

TEST_CASE("construct unitize of the 1-dim zero algebra") {
    fs::path z = write_temp(zero_algebra(1), "cli-z1.json");
    fs::path out = fs::temp_directory_path() / "cli-z1u.json";
    REQUIRE(run_cli("construct unitize " + z.string() + " -o " + out.string()).exit_code == 0);
    Algebra u = load_algebra(out.string());
    CHECK(u.dim() == 2);
    CHECK(u.is_unital());
    RunResult a = run_cli("analyze " + out.string());
    Json j = Json::parse(a.out);
    // same classification as the dual numbers
    CHECK(j.at("dims").at("derivation") == 1);
    CHECK(j.at("verdicts").at("cyclically_amenable") == "true");
}

TEST_CASE("construct lau with a character index") {
    fs::path q = write_temp(scalar_algebra(), "cli-q2.json");
    fs::path z = write_temp(zero_algebra(1), "cli-z.json");
    fs::path out = fs::temp_directory_path() / "cli-lau.json";
    // theta = chi0, the identity character of Q
    RunResult r = run_cli("construct lau " + z.string() + " " + q.string() +
                          " --theta 0 -o " + out.string());
    REQUIRE(r.exit_code == 0);
    Algebra l = load_algebra(out.string());
    CHECK(l.dim() == 2);
    CHECK(l.is_unital());

    // out-of-range index
    RunResult bad = run_cli("construct lau " + z.string() + " " + q.string() +
                            " --theta 5 -o " + out.string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("construct quotient with seed vectors") {
    fs::path t2 = write_temp(upper_triangular_algebra(2), "cli-t2b.json");
    fs::path out = fs::temp_directory_path() / "cli-quot.json";
    RunResult r = run_cli("construct quotient " + t2.string() + " --seed 0,1,0 -o " +
                          out.string());
    REQUIRE(r.exit_code == 0);
    Algebra q = load_algebra(out.string());
    CHECK(q.dim() == 2);

    RunResult bad = run_cli("construct quotient " + t2.string() + " --seed 1,2 -o " +
                            out.string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("check subcommand: structural ids pass, unknown id fails") {
    RunResult r = run_cli("check --theorem DECOMP --trials 5 --max-dim 4 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("DECOMP") != std::string::npos);

    RunResult bad = run_cli("check --theorem NOPE --trials 2 --max-dim 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("check writes witnesses that re-verify") {
    fs::path wdir = fs::temp_directory_path() / "cli-witnesses";
    fs::remove_all(wdir);
    RunResult r = run_cli("check --theorem T5.op --trials 4 --max-dim 4 --seed 1 "
                          "--negate-conclusions --witness-dir " + wdir.string());
    CHECK(r.exit_code == 1);
    REQUIRE(fs::exists(wdir));
    bool found = false;
    for (const auto& entry : fs::directory_iterator(wdir)) {
        found = true;
        RunResult rv = run_cli("check --trials 4 --max-dim 4 --seed 1 --negate-conclusions "
                               "--reverify " + entry.path().string());
        CHECK(rv.exit_code == 1);
        CHECK(rv.out.find("witness reproduces") != std::string::npos);
        break;
    }
    CHECK(found);
}

TEST_CASE("check --json emits a machine summary, identically across runs") {
    RunResult r1 = run_cli("check --theorem T5.bidual --trials 4 --max-dim 4 --seed 7 --json");
    RunResult r2 = run_cli("check --theorem T5.bidual --trials 4 --max-dim 4 --seed 7 --json");
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    Json j = Json::parse(r1.out);
    CHECK(j.at("checks")[0].at("status") == "pass");
    CHECK(j.at("counterexample_found") == false);
}
