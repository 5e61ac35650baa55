#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#ifndef PCOVER_CLI_BIN
#error "PCOVER_CLI_BIN must point at the cli binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PCOVER_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("pds on a path answers YES with an internal vertex") {
    auto r = run_cli("--problem pds --k 1 --t 3 --gen path:5 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"answer\":\"YES\"") != std::string::npos);
}

TEST_CASE("center with an unreachable target answers NO") {
    auto r = run_cli("--problem center --k 1 --r 1 --t 4 --gen path:5 --oracle");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"answer\":\"NO\"") != std::string::npos);
}

TEST_CASE("pvc with k = t = 0 is trivially YES") {
    auto r = run_cli("--problem pvc --k 0 --t 0 --gen path:4 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"witness\":[]") != std::string::npos);
}

TEST_CASE("psc goes through the incidence reduction") {
    std::string file = "/tmp/pcover_test_psc.gr";
    std::ofstream(file) << "p pcover 5 3\n"
                           "e 1 3\ne 1 4\ne 2 5\n"
                           "w 1 0\nw 2 0\n";
    auto r = run_cli("--problem psc --k 1 --t 2 --input " + file + " --oracle");
    CHECK(r.exit_code == 0);
    auto r2 = run_cli("--problem psc --k 1 --t 3 --input " + file + " --oracle");
    CHECK(r2.exit_code == 1);
    std::remove(file.c_str());
}

TEST_CASE("flag validation failures exit 2") {
    CHECK(run_cli("--problem pvc --k 1 --t 1 --r 2 --gen path:4").exit_code == 2);
    CHECK(run_cli("--problem center --k 1 --t 1 --gen path:4").exit_code == 2); // missing --r
    CHECK(run_cli("--problem pds --k 1 --t 1").exit_code == 2); // no input
    CHECK(run_cli("--problem pds --k 1 --t 1 --gen path:4 --class bipartite").exit_code == 2);
    CHECK(run_cli("--problem pvc --k 1 --t 1 --gen path:4 --mode planar").exit_code == 2);
}

TEST_CASE("malformed files exit 2") {
    std::string file = "/tmp/pcover_test_bad.gr";
    std::ofstream(file) << "p pcover 2 1\ne 1 5\n";
    CHECK(run_cli("--problem pds --k 1 --t 1 --input " + file).exit_code == 2);
    std::remove(file.c_str());
}

TEST_CASE("identical flags and seed give byte-identical records") {
    std::string args = "--problem pds --k 2 --t 6 --gen gnp:10,0.3 --seed 99";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
