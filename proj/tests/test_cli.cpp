// Shells out to the toricmld binary and checks the exit-status contract:
// 0 success, 1 domain error, 2 usage or parse error.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef TORICMLD_CLI
#define TORICMLD_CLI "toricmld"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TORICMLD_CLI) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path write_cone(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "toricmld-cli-test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("cli: successful quotient queries exit 0 with exact payloads") {
    auto r = run("mld --quotient 5:1,2");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"mld_log\": \"3/5\"") != std::string::npos);
    CHECK(r.out.find("\"mld_disc\": \"-2/5\"") != std::string::npos);
    CHECK(r.out.find("klt-not-canonical") != std::string::npos);

    auto s = run("mld --quotient 6:2,3");
    CHECK(s.status == 0);
    CHECK(s.out.find("\"smooth\": true") != std::string::npos);
}

TEST_CASE("cli: domain errors exit 1 without payload") {
    auto r = run("mld --quotient 4:2,2");
    CHECK(r.status == 1);
    CHECK(r.out.empty());

    auto s = run("lift --quotient 6:2,3 --times 1");
    CHECK(s.status == 1);

    auto cone = write_cone("smooth.cone",
                           "dim 2\nlattice\n1 0\n0 1\nrays\n1 0\n0 1\n");
    auto t = run("reduce --cone " + cone.string());
    CHECK(t.status == 1);
}

TEST_CASE("cli: usage and parse errors exit 2") {
    CHECK(run("mld").status == 2);
    CHECK(run("mld --quotient 5:1,2 --cone x").status == 2);
    CHECK(run("mld --quotient 5:1.5,2").status == 2);
    CHECK(run("sequence --base 3:1,1 --l 0 --n 2 --orders 4").status == 2);
    CHECK(run("sequence --base 3:1,1 --l 0 --n 3 --orders 5").status == 2);
    auto cone = write_cone("float.cone",
                           "dim 2\nlattice\n1 0\n0.5 0.5\nrays\n1 0\n0 1\n");
    CHECK(run("mld --cone " + cone.string()).status == 2);
    CHECK(run("mld --cone /nonexistent.cone").status == 2);
}

TEST_CASE("cli: identical invocations are byte-identical") {
    auto a = run("sequence --base 3:1,1 --l 0 --n 3 --orders 4,7,13");
    auto b = run("sequence --base 3:1,1 --l 0 --n 3 --orders 4,7,13");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"limit\":\"2/3\"") != std::string::npos);
}
