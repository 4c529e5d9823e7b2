#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "tsperfect/io.hpp"

using tsperfect::io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tsperfect");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = tsperfect::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TSPERFECT_DATA_DIR) + "/" + name; }

// Scratch directory removed at scope exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("tsperfect-cli-" + std::to_string(::getpid()) + "-" +
                                           std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
};

}  // namespace

TEST_CASE("cli: weight and ball") {
    const Run w = cli({"weight", "--poset", data("chain3.json"), "--vector", "001"});
    CHECK(w.code == 0);
    CHECK(w.out == "3\n");
    CHECK(cli({"weight", "--covering", data("f1.json"), "--vector", "0110"}).out == "2\n");

    const Run b = cli({"ball", "--covering", data("f4.json"), "--center", "000000", "--radius", "1"});
    CHECK(b.code == 0);
    CHECK(b.j()["vectors"].size() == 8);

    CHECK(cli({"weight", "--poset", data("chain3.json"), "--vector", "01"}).code == 2);
    CHECK(cli({"weight", "--vector", "001"}).code == 2);
    CHECK(cli({"weight", "--poset", data("chain3.json"), "--covering", data("f1.json"), "--vector", "001"}).code == 2);
    CHECK(cli({"weight", "--poset", data("missing.json"), "--vector", "001"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("cli: weight tables, validation, equivalence, metrization") {
    Scratch s;
    const std::string bad = s.write("bad.json", R"({"n":2,"weights":[0,1,1,5]})");
    const Run v = cli({"validate-weight", "--table", bad});
    CHECK(v.code == 1);
    CHECK(v.j()["weight_violation"]["kind"] == "triangle");
    CHECK(v.j()["weight_violation"]["u"] == "10");
    CHECK(v.j()["weight_violation"]["v"] == "01");

    const Run m = cli({"metrize", "--table", bad});
    CHECK(m.code == 0);
    const std::string metrized = s.write("m.json", m.out);
    CHECK(cli({"validate-weight", "--table", metrized}).code == 0);
    CHECK(cli({"equiv", "--a", bad, "--b", metrized}).code == 0);

    const std::string ham = s.write("h.json", R"({"n":3,"weights":[0,1,1,2,1,2,2,3]})");
    const std::string chain = s.write("c.json", R"({"n":3,"weights":[0,1,2,2,3,3,3,3]})");
    const Run e = cli({"equiv", "--a", ham, "--b", chain});
    CHECK(e.code == 1);
    CHECK(e.j()["witness"]["u"] == "001");
    CHECK(e.j()["witness"]["v"] == "110");

    CHECK(cli({"validate-weight", "--table", s.write("short.json", R"({"n":2,"weights":[0,1]})")}).code == 2);
    CHECK(cli({"validate-weight", "--table", s.write("junk.json", "{not json")}).code == 2);
}

TEST_CASE("cli: TS-balls") {
    const Run no = cli({"is-ts-ball", "--set", data("rejected.json")});
    CHECK(no.code == 1);
    CHECK(no.j()["witness"]["missing"] == "0011");
    const Run yes = cli({"is-ts-ball", "--set", data("hamming_ball7.json")});
    CHECK(yes.code == 0);
    CHECK(yes.j()["witness"]["radius"] == 1);
    Scratch s;
    CHECK(cli({"is-ts-ball", "--set", s.write("no0.json", R"({"n":2,"vectors":["01"]})")}).code == 2);
}

TEST_CASE("cli: complete then verify, perfect-check") {
    Scratch s;
    const Run c = cli({"complete-tiling", "--tile", data("hamming_ball7.json"), "--n", "7"});
    REQUIRE(c.code == 0);
    CHECK(c.j()["code"].size() == 16);
    const std::string tiling = s.write("t.json", c.out);
    CHECK(cli({"verify-tiling", "--tiling", tiling}).code == 0);

    std::vector<int> ham;
    for (int v = 0; v < 128; ++v) ham.push_back(__builtin_popcount(v));
    const std::string table = s.write("h7.json", json{{"n", 7}, {"weights", ham}}.dump());
    CHECK(cli({"perfect-check", "--code", tiling, "--table", table, "--radius", "1"}).code == 0);
    const Run r2 = cli({"perfect-check", "--code", tiling, "--table", table, "--radius", "2"});
    CHECK(r2.code == 1);
    CHECK(r2.j()["failure"] == "overlap");
    CHECK(cli({"perfect-check", "--code", tiling, "--table", table, "--radius", "0"}).code == 2);

    const std::string bad = s.write("bad.json", R"({"n":2,"tile":["00","01"],"code":["00","01"]})");
    const Run v = cli({"verify-tiling", "--tiling", bad});
    CHECK(v.code == 1);
    CHECK(v.j()["point"] == "10");

    const Run none = cli({"complete-tiling", "--tile", s.write("d.json", R"({"n":3,"vectors":["000","100","010"]})"), "--n", "3"});
    CHECK(none.code == 1);
    CHECK(none.j()["tileable"] == false);
}

TEST_CASE("cli: D_n(x) family") {
    const Run four = cli({"dn-family", "--n", "6", "--weight", "4", "--check-tile"});
    CHECK(four.code == 1);
    CHECK(four.out.find("not a tile") != std::string::npos);
    CHECK(four.j()["exact_cover"] == false);

    const Run two = cli({"dn-family", "--n", "6", "--x", "010100", "--check-tile", "--ts-witness"});
    CHECK(two.code == 0);
    CHECK(two.j()["ts_perfect"] == true);
    CHECK(two.j()["covering"]["blocks"].size() == 7);

    const Run three = cli({"dn-family", "--n", "6", "--weight", "3", "--ts-witness"});
    CHECK(three.code == 1);
    CHECK(three.j()["missing_submask"] == "110000");

    CHECK(cli({"dn-family", "--n", "6", "--weight", "1"}).code == 2);
    CHECK(cli({"dn-family", "--n", "6", "--weight", "3", "--x", "111000"}).code == 2);
}

TEST_CASE("cli: extension and concatenation") {
    Scratch s;
    const std::string t4 = s.write("t4.json", cli({"complete-tiling", "--tile", s.write("d14.json",
        R"({"n":4,"vectors":["0000","1000","0100","0010","0001","1100","1010","1001"]})"), "--n", "4"}).out);
    const Run x = cli({"extend", "--tiling", t4, "--n", "6"});
    REQUIRE(x.code == 0);
    CHECK(x.j()["n"] == 6);
    CHECK(cli({"verify-tiling", "--tiling", s.write("x.json", x.out)}).code == 0);

    const std::string h3 = s.write("h3.json", R"({"n":3,"weights":[0,1,1,2,1,2,2,3]})");
    const Run xw = cli({"extend", "--weight", h3, "--s", "3", "--n", "6"});
    CHECK(xw.code == 0);
    CHECK(xw.j()["weights"][8] == 4);
    CHECK(cli({"extend", "--weight", h3, "--s", "4", "--n", "6"}).code == 2);

    const std::string rep = s.write("rep.json", R"({"n":3,"tile":["000","100","010","001"],"code":["000","111"]})");
    const Run cc = cli({"concat", "--left", rep, "--right", rep});
    REQUIRE(cc.code == 0);
    CHECK(cc.j()["code"].size() == 4);
    const std::string ct = s.write("cc.json", cc.out);
    CHECK(cli({"verify-tiling", "--tiling", ct}).code == 0);

    const Run mw = cli({"concat", "--left", h3, "--right", h3, "--scales", "2", "1"});
    REQUIRE(mw.code == 0);
    const std::string mt = s.write("mw.json", mw.out);
    CHECK(cli({"validate-weight", "--table", mt}).code == 0);
    CHECK(cli({"concat", "--left", rep, "--right", h3}).code == 2);

    const std::string notiling = s.write("nt.json", R"({"n":2,"tile":["00","01"],"code":["00","01"]})");
    CHECK(cli({"concat", "--left", rep, "--right", notiling}).code == 1);
}

TEST_CASE("cli: classification") {
    const Run c8 = cli({"classify", "--size", "8"});
    REQUIRE(c8.code == 0);
    int survivors = 0;
    for (const auto& rec : c8.j()) survivors += rec["is_tile"] == true && rec["ts"]["status"] == "yes";
    CHECK(survivors == 6);
    CHECK(cli({"classify", "--size", "8"}).out == c8.out);

    const Run table = cli({"classify", "--size", "4", "--table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("Rank") != std::string::npos);

    const Run comb = cli({"classify", "--size", "8", "--realize", "combinatorial"});
    CHECK(comb.code == 0);
    CHECK(comb.out.size() > c8.out.size());
    CHECK(cli({"classify", "--size", "3"}).code == 2);
    CHECK(cli({"classify", "--size", "8", "--realize", "lattice"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
