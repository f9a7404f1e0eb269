#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blockwords/cli.hpp"

using blockwords::run_cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(BW_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_path(const std::string& name) { return std::string(BW_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

}  // namespace

TEST_CASE("generate golden outputs") {
    RunResult tm = run({"generate", "tm-kappa", "--seed", "001110", "-n", "33"});
    CHECK(tm.code == 0);
    CHECK(tm.out == "001110101101110010110001101110001\n");

    RunResult tm9 = run({"generate", "tm-kappa", "--seed", "001110", "-n", "9"});
    CHECK(tm9.out == "001110101\n");
    RunResult tm12 = run({"generate", "tm-kappa", "--seed", "001110", "-n", "12"});
    CHECK(tm12.out == "001110101101\n");

    RunResult pell = run({"generate", "pell-morphism", "--seed", "0", "-n", "13"});
    CHECK(pell.code == 0);
    CHECK(pell.out == "0010010001001\n");

    RunResult kol12 = run({"generate", "kolakoski-selfread", "--start", "2", "-n", "6",
                           "--coding", "12"});
    CHECK(kol12.code == 0);
    CHECK(kol12.out == "221121\n");

    RunResult kol01 = run({"generate", "kolakoski-selfread", "--start", "2", "-n", "6"});
    CHECK(kol01.code == 0);
    CHECK(kol01.out == "110010\n");
}

TEST_CASE("generate from a rule file") {
    std::string rules = temp_file("bw_tm_rules.txt", "00 -> 001\n01 -> 010\n10 -> 101\n11 -> 110\n");
    RunResult r = run({"generate", rules, "--seed", "001110", "-n", "33"});
    CHECK(r.code == 0);
    CHECK(r.out == "001110101101110010110001101110001\n");
}

TEST_CASE("generate error paths") {
    RunResult stalled = run({"generate", "tm-kappa", "--seed", "001", "-n", "100"});
    CHECK(stalled.code == 2);
    CHECK(stalled.err.find("stalled") != std::string::npos);

    RunResult noseed = run({"generate", "tm-kappa", "-n", "10"});
    CHECK(noseed.code == 2);

    RunResult badargs = run({"generate"});
    CHECK(badargs.code == 2);

    RunResult unknown = run({"generate", "nope", "-n", "5"});
    CHECK(unknown.code == 2);
}

TEST_CASE("list prints the registry") {
    RunResult r = run({"list"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("list.txt"));
}

TEST_CASE("commute golden outputs and exit codes") {
    RunResult pell = run({"commute", "pell-kappa", "pell-morphism", "--gens", "00,01,10"});
    CHECK(pell.code == 0);
    CHECK(pell.out == golden("commute_pell.txt"));

    RunResult ex2 = run({"commute", "ex2-kappa-prime", "ex2-sigma", "--gens", "000,001,010,100"});
    CHECK(ex2.code == 0);

    RunResult tm = run({"commute", "tm-kappa", "tm-morphism"});
    CHECK(tm.code == 1);
    CHECK(tm.out == golden("commute_tm.txt"));
}

TEST_CASE("analyze complexity golden output") {
    RunResult r = run({"analyze", "complexity", "tm-kappa-fixed-point", "-n", "14",
                       "--prefix-length", "200000"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("complexity_tm14.txt"));
}

TEST_CASE("analyze invariance reports the reversal gap") {
    RunResult r = run({"analyze", "invariance", "tm-kappa-fixed-point", "--transform", "reverse",
                       "--nmax", "6", "--prefix-length", "100000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"001000\"") != std::string::npos);
    CHECK(r.out.find("\"000100\"") != std::string::npos);
}

TEST_CASE("analyze periodicity golden output") {
    RunResult r = run({"analyze", "periodicity", "001001001"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("periodicity_001.txt"));

    RunResult not_periodic = run({"analyze", "periodicity", "tm-kappa-fixed-point",
                                  "--prefix-length", "100000", "--max-preperiod", "100",
                                  "--max-period", "100"});
    CHECK(not_periodic.code == 0);
    CHECK(not_periodic.out.find("\"found\": false") != std::string::npos);
}

TEST_CASE("analyze frequency and powers run") {
    RunResult f = run({"analyze", "frequency", "thue-morse", "-w", "000", "--prefix-length",
                       "100000"});
    CHECK(f.code == 0);
    CHECK(f.out.find("\"count\": 0") != std::string::npos);

    RunResult p = run({"analyze", "powers", "tm-kappa-fixed-point", "-e", "4", "--max-base", "4",
                       "--prefix-length", "10000"});
    CHECK(p.code == 0);
    CHECK(p.out.find("\"base\": \"01\"") != std::string::npos);
}

TEST_CASE("analyze compare of the four block fixed points") {
    RunResult r = run({"analyze", "compare", "tm-kappa-fixed-point", "tm-kappa-fixed-point-11",
                       "--nmax", "3", "--prefix-length", "50000"});
    CHECK(r.code == 0);
}

TEST_CASE("solve-eq golden outputs") {
    RunResult ex3 = run({"solve-eq", data_path("ex3.sys"), "--max-len", "19"});
    CHECK(ex3.code == 0);
    CHECK(ex3.out == golden("solve_ex3.txt"));

    RunResult pell = run({"solve-eq", data_path("pell.sys"), "--max-len", "6"});
    CHECK(pell.code == 0);
    CHECK(pell.out == golden("solve_pell6.txt"));

    RunResult ex2 = run({"solve-eq", data_path("ex2.sys"), "--max-len", "12"});
    CHECK(ex2.code == 0);
    CHECK(ex2.out == golden("solve_ex2.txt"));

    RunResult none = run({"solve-eq", data_path("pell.sys"), "--max-len", "0"});
    CHECK(none.code == 0);
    CHECK(none.out.find("# solutions (0)") != std::string::npos);
}

TEST_CASE("oeis-check") {
    // fixture generated along the independent morphism route
    RunResult ok = run({"oeis-check", "pell-kappa", data_path("b_pell_fixture.txt"), "--seed",
                        "0010"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "checked 2000 terms: all match\n");

    RunResult shifted = run({"oeis-check", "pell-kappa", data_path("b_pell_shifted.txt"),
                             "--seed", "0010"});
    CHECK(shifted.code == 1);
    CHECK(shifted.out.find("mismatch at index 0") != std::string::npos);

    std::string empty = temp_file("bw_empty_bfile.txt", "# empty\n");
    RunResult vacuous = run({"oeis-check", "pell-kappa", empty, "--seed", "0010"});
    CHECK(vacuous.code == 0);
    CHECK(vacuous.out.find("warning: no overlapping terms") != std::string::npos);

    std::string bad = temp_file("bw_bad_bfile.txt", "0 0\nnot-a-number\n");
    RunResult malformed = run({"oeis-check", "pell-kappa", bad, "--seed", "0010"});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"solve-eq", "missing.sys", "--max-len", "3"}).code == 2);
}
