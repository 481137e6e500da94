#include "doctest.h"
#include "lozenge/cli.hpp"
#include "lozenge/count.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/regions.hpp"
#include "support.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace lozenge;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "lozenge");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("macmahon command")
{
    auto r = run({"macmahon", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "20\n");
    CHECK(run({"macmahon", "3", "3", "3"}).out == "980\n");
    CHECK(run({"macmahon", "2", "x", "2"}).code == 2);
}

TEST_CASE("count command")
{
    auto bare = run({"count", "--family", "H", "--a", "1", "--b", "1", "--k", "1"});
    CHECK(bare.code == 0);
    CHECK(bare.out == "0\n");

    auto gv = run({"count", "--family", "R", "--l", "2,4,5", "--q", "2,4", "--x", "2", "--method", "gv"});
    CHECK(gv.code == 0);
    CHECK(gv.out == to_string(count_oracle(r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2))) + "\n");

    auto all = run({"count", "--family", "Rbar", "--l", "1,3", "--q", "2", "--x", "2", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("match=true") != std::string::npos);

    auto hex = run({"count", "--family", "H", "--a", "5", "--b", "6", "--k", "6", "--window", "D:4@5",
                    "--window", "D:2@11", "--method", "all"});
    CHECK(hex.code == 0);
    CHECK(hex.out.rfind("RESULT theorem[", 0) == 0);
    const auto end = hex.out.find(" oracle=");
    REQUIRE(end != std::string::npos);
    CHECK(hex.out.substr(7, end - 7).find(' ') == std::string::npos);

    CHECK(run({"count", "--family", "R", "--l", "3,2", "--q", "-", "--x", "1"}).code == 2);
    CHECK(run({"count", "--family", "R", "--l", "2", "--q", "-", "--x", "-9"}).code == 2);
    CHECK(run({"count", "--family", "H", "--a", "2", "--b", "2", "--k", "0", "--window", "D:2@3"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("formula command")
{
    auto r = run({"formula", "--family", "R", "--l", "2,4,5", "--q", "2,4", "--x", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == to_string(count_oracle(r_region(IndexList{2, 4, 5}, IndexList{2, 4}, 2))) + "\n");
    auto half = run({"formula", "--family", "R", "--l", "-", "--q", "1", "--x", "1/2"});
    CHECK(half.code == 0);
    CHECK_FALSE(half.out.empty());
}

TEST_CASE("verify command")
{
    auto ok = run({"verify", "prop21", "--max-entry", "2", "--max-len", "1", "--xspan", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("SUMMARY checks=") != std::string::npos);
    CHECK(ok.out.find("mismatches=0") != std::string::npos);

    // The sweep contains placements with a window touching the top side.
    auto thm = run({"verify", "theorem11", "--max-ab", "2", "--max-k", "2", "--max-windows", "1"});
    CHECK(thm.code == 1);
    CHECK(thm.out.find("match=false") != std::string::npos);

    CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("render and cut commands")
{
    auto a = run({"render", "--family", "H", "--a", "1", "--b", "1", "--k", "0", "--format", "ascii"});
    CHECK(a.code == 0);
    CHECK(a.out == "# region cells=6 halves=0 rows=0..1 cols=0..2\nAVA\nVAV\n");

    auto svg = run({"render", "--family", "H", "--a", "5", "--b", "5", "--k", "3", "--format", "svg"});
    CHECK(svg.out == testing_support::read_file(LOZENGE_TEST_DIR "/golden/hexagon_5_5_3.svg"));

    const auto dir = std::filesystem::temp_directory_path() / "lozenge_cli_test";
    std::filesystem::create_directories(dir);
    const std::string tri = (dir / "h.tri").string();
    CHECK(run({"render", "--family", "H", "--a", "2", "--b", "2", "--k", "0", "--format", "triregion",
               "--output", tri})
              .code == 0);
    CHECK(run({"count", "--input", tri}).out == "20\n");

    auto cut = run({"cut", "--input", tri, "--output", (dir / "p").string()});
    CHECK(cut.code == 0);
    CHECK(cut.out.find("width 2") != std::string::npos);
    Region plus = read_triregion(testing_support::read_file((dir / "p.plus.tri").string()));
    Region minus = read_triregion(testing_support::read_file((dir / "p.minus.tri").string()));
    CHECK(ExactRational(20) == pow2(2) * count_oracle(plus) * count_oracle(minus));

    const std::string bad = (dir / "bad.tri").string();
    {
        std::FILE* f = std::fopen(bad.c_str(), "w");
        std::fputs("HELLO\n", f);
        std::fclose(f);
    }
    auto err = run({"count", "--input", bad});
    CHECK(err.code == 2);
    CHECK(err.err.find("line 1") != std::string::npos);
    std::filesystem::remove_all(dir);
}
