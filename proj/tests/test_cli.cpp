#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "csv.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args)
{
    const std::string command = std::string(CYLOSC_BIN) + " " + args + " 2>/dev/null";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "cylosc_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("density subcommand writes a CSV")
{
    const auto out = scratch("density.csv");
    REQUIRE(run("density --grid-phi 2 --grid-l 2 --out " + out.string()) == 0);
    const auto table = csv::parse(csv::slurp(out.string()));
    CHECK(table.header == "t,phi,l,p");
    CHECK(table.rows.size() == 4);
}

TEST_CASE("options are accepted before and after the subcommand")
{
    const auto a = scratch("a.csv");
    const auto b = scratch("b.csv");
    REQUIRE(run("--omega 1.62 jumps --k-max 3 --out " + a.string()) == 0);
    REQUIRE(run("jumps --omega 1.62 --k-max 3 --out " + b.string()) == 0);
    CHECK(csv::slurp(a.string()) == csv::slurp(b.string()));
    CHECK(csv::parse(csv::slurp(a.string())).rows.size() == 4);
}

TEST_CASE("config file provides defaults, flags win")
{
    const auto config = scratch("run.ini");
    {
        std::ofstream f(config);
        f << "omega=1.62\nk-max=4\n";
    }
    const auto out = scratch("jumps.csv");
    REQUIRE(run("jumps --config " + config.string() + " --out " + out.string()) == 0);
    CHECK(csv::parse(csv::slurp(out.string())).rows.size() == 5);
    REQUIRE(run("jumps --config " + config.string() + " --k-max 1 --out " + out.string()) == 0);
    CHECK(csv::parse(csv::slurp(out.string())).rows.size() == 2);
}

TEST_CASE("identical runs produce identical bytes")
{
    const auto a = scratch("t1.csv");
    const auto b = scratch("t2.csv");
    REQUIRE(run("trajectory --t-max 20 --out " + a.string()) == 0);
    REQUIRE(run("trajectory --t-max 20 --out " + b.string()) == 0);
    CHECK(csv::slurp(a.string()) == csv::slurp(b.string()));
}

TEST_CASE("exit codes")
{
    CHECK(run("--help > /dev/null") == 0);
    CHECK(run("") == 2);
    CHECK(run("density --no-such-flag 1") == 2);
    CHECK(run("density --omega abc") == 2);
    CHECK(run("density --omega 0 --out /dev/null") == 2);
    CHECK(run("density --grid-phi 1 --out /dev/null") == 2);
    CHECK(run("classical --out /nonexistent-dir/x.csv") == 1);
    // the angular series for J = 40 needs more terms than the default cap
    CHECK(run("density --J 40 --grid-phi 2 --grid-l 2 --out /dev/null") == 1);
}
