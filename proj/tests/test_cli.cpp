// Drives the surplus-cut binary end to end: output formats, exit codes,
// and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("surplus_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    fs::path err = work_dir() / "stderr.txt";
    std::string cmd = std::string(SURPLUS_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int raw = std::system(cmd.c_str());
    int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out), slurp(err)};
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("gen writes deterministic edge lists") {
    auto a = run("gen gnp --n 10 --p 0.5 --seed 7 --out " + path_of("a.el"));
    auto b = run("gen gnp --n 10 --p 0.5 --seed 7 --out " + path_of("b.el"));
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp(path_of("a.el")) == slurp(path_of("b.el")));

    auto dgt = run("gen dgt --q 5 --k 3 --out " + path_of("dgt.el"));
    REQUIRE(dgt.exit_code == 0);
    std::string text = slurp(path_of("dgt.el"));
    CHECK(text.substr(0, 7) == "25 150\n");

    auto cyc = run("gen cycle --n 5 --out " + path_of("c5.el"));
    REQUIRE(cyc.exit_code == 0);
    CHECK(slurp(path_of("c5.el")).substr(0, 4) == "5 5\n");

    auto wheel = run("gen wheel --k 2 --out " + path_of("w4.el"));
    REQUIRE(wheel.exit_code == 0);
    CHECK(slurp(path_of("w4.el")).substr(0, 4) == "5 8\n");

    auto polarity = run("gen polarity --q 3 --out " + path_of("er3.el"));
    REQUIRE(polarity.exit_code == 0);
    CHECK(slurp(path_of("er3.el")).substr(0, 3) == "13 ");

    auto tf = run("gen trianglefree --n 12 --seed 5 --out " + path_of("tf12.el"));
    REQUIRE(tf.exit_code == 0);
}

TEST_CASE("gen usage errors") {
    CHECK(run("gen nosuchfamily --n 4 --out " + path_of("x.el")).exit_code == 1);
    CHECK(run("gen cycle --out " + path_of("x.el")).exit_code == 1);  // missing --n
    CHECK(run("gen cycle --n 5").exit_code == 1);                     // missing --out
}

TEST_CASE("audit") {
    run("gen complete --n 4 --out " + path_of("k4.el"));
    auto table = run("audit " + path_of("k4.el") + " --eps 1");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("c_star = 1") != std::string::npos);

    auto csv = run("audit " + path_of("k4.el") + " --eps 1 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("vertex,degree,nbhd_edges,local_c") == 0);
    CHECK(csv.out.find("c_star,1,witness,0") != std::string::npos);

    auto to_file = run("audit " + path_of("k4.el") + " --eps 1 --format csv --out " +
                       path_of("audit.csv"));
    REQUIRE(to_file.exit_code == 0);
    CHECK(slurp(path_of("audit.csv")) == csv.out);

    // triangle-free input has c_star 0
    run("gen trianglefree --n 30 --seed 2 --out " + path_of("tf.el"));
    auto tf = run("audit " + path_of("tf.el") + " --eps 1 --format csv");
    CHECK(tf.out.find("c_star,0,witness") != std::string::npos);
}

TEST_CASE("audit rejects malformed files with a line number") {
    std::ofstream bad(path_of("bad.el"));
    bad << "3 2\n0 1\noops\n";
    bad.close();
    auto result = run("audit " + path_of("bad.el") + " --eps 1");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("line 3") != std::string::npos);

    auto missing = run("audit " + path_of("nonexistent.el") + " --eps 1");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cut") {
    run("gen complete --n 4 --out " + path_of("k4.el"));
    auto not_sparse = run("cut " + path_of("k4.el") + " --eps 1 --c 0.5");
    CHECK(not_sparse.exit_code == 3);
    CHECK(not_sparse.err.find("witness") != std::string::npos);

    std::ofstream pet(path_of("petersen.el"));
    pet << "10 15\n0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";
    pet.close();
    auto cut = run("cut " + path_of("petersen.el") +
                   " --eps 1 --c 1 --trials 200 --seed 1 --out " + path_of("p.cut"));
    REQUIRE(cut.exit_code == 0);
    CHECK(cut.out.find("crossing=12 surplus=4.5") != std::string::npos);
    std::string cut_file = slurp(path_of("p.cut"));
    CHECK(cut_file.find("crossing=12 surplus=4.5") != std::string::npos);
    CHECK(cut_file.find('\n') == 10);  // one side character per vertex

    // byte-identical reruns with identical flags, and thread count does
    // not change the result
    auto rerun = run("cut " + path_of("petersen.el") +
                     " --eps 1 --c 1 --trials 200 --seed 1 --out " + path_of("p.cut"));
    CHECK(rerun.out == cut.out);
    CHECK(slurp(path_of("p.cut")) == cut_file);
    auto threaded = run("cut " + path_of("petersen.el") +
                        " --eps 1 --c 1 --trials 200 --seed 1 --threads 4 --out " +
                        path_of("p4.cut"));
    CHECK(slurp(path_of("p4.cut")) == cut_file);

    // the dichotomy pipeline reports its branch
    auto dich = run("cut " + path_of("petersen.el") +
                    " --eps 1 --c 1 --trials 50 --seed 1 --dichotomy");
    REQUIRE(dich.exit_code == 0);
    CHECK(dich.out.find("branch=") != std::string::npos);
    CHECK(dich.out.find("bound=") != std::string::npos);
}

TEST_CASE("bounds") {
    std::ofstream pet(path_of("petersen.el"));
    pet << "10 15\n0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";
    pet.close();
    auto table = run("bounds " + path_of("petersen.el") + " --eps 1 --c 1");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("exact_surplus") != std::string::npos);
    CHECK(table.out.find("4.5") != std::string::npos);

    run("gen kst --s 1 --t 3 --out " + path_of("star.el"));
    auto star = run("bounds " + path_of("star.el") + " --eps 1 --c 1");
    REQUIRE(star.exit_code == 0);
    CHECK(star.out.find("not regular") != std::string::npos);

    auto csv1 = run("bounds " + path_of("petersen.el") + " --eps 1 --c auto --format csv");
    auto csv2 = run("bounds " + path_of("petersen.el") + " --eps 1 --c auto --format csv");
    REQUIRE(csv1.exit_code == 0);
    CHECK(csv1.out == csv2.out);
}

TEST_CASE("experiment") {
    auto sweep = run("experiment --family trianglefree --sizes 40,60,80,100,120 --eps 1 --c 1"
                     " --trials 20 --seed 3 --out " + path_of("sweep.csv"));
    REQUIRE(sweep.exit_code == 0);
    std::string csv = slurp(path_of("sweep.csv"));
    CHECK(csv.find("# surplus-cut v1\n") == 0);
    CHECK(csv.find("family,param,n,m,") != std::string::npos);
    CHECK(csv.find("# fit slope=") != std::string::npos);
    CHECK(csv.find("# predicted chi3=0.8") != std::string::npos);
    CHECK(sweep.err.find("# timing") != std::string::npos);

    auto again = run("experiment --family trianglefree --sizes 40,60,80,100,120 --eps 1 --c 1"
                     " --trials 20 --seed 3 --out " + path_of("sweep2.csv"));
    CHECK(slurp(path_of("sweep2.csv")) == csv);

    // under five sizes: usage error for slope families, fine for dgt
    CHECK(run("experiment --family trianglefree --sizes 40,60 --eps 1 --c 1").exit_code == 1);
    auto dgt = run("experiment --family dgt --sizes 5,7,11,13 --eps 0.3333333333333333 --c auto"
                   " --trials 5 --seed 1");
    REQUIRE(dgt.exit_code == 0);
    auto spread_pos = dgt.out.find("# ratio_spread=");
    REQUIRE(spread_pos != std::string::npos);
    double spread = std::stod(dgt.out.substr(spread_pos + 15));
    CHECK(spread > 1.0);
    CHECK(spread < 3.0);

    CHECK(run("experiment --family trianglefree --eps 1 --c 1").exit_code == 1);  // no sizes
}
