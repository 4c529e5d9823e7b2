#include <doctest.h>

#include "tsperfect/io.hpp"

using namespace tsperfect;
using tsperfect::io::json;

TEST_CASE("vector sets round-trip") {
    const VectorSet s = VectorSet::from_strings({"000", "100", "011"});
    const json j = io::to_json(s);
    CHECK(j["n"] == 3);
    CHECK(j["vectors"] == json::array({"000", "100", "011"}));
    CHECK(io::vector_set_from_json(j) == s);
    CHECK_THROWS_AS(io::vector_set_from_json(json{{"n", 3}, {"vectors", {"00"}}}), io::FormatError);
    CHECK_THROWS_AS(io::vector_set_from_json(json{{"n", 3}, {"vectors", {"000", "000"}}}), io::FormatError);
    CHECK_THROWS_AS(io::vector_set_from_json(json{{"vectors", {"000"}}}), io::FormatError);
    CHECK_THROWS_AS(io::vector_set_from_json(json{{"n", 0}, {"vectors", json::array()}}), io::FormatError);
}

TEST_CASE("tilings, posets, coverings and tables round-trip") {
    const Tiling t{2, VectorSet::from_strings({"00", "10"}), VectorSet::from_strings({"00", "01"})};
    CHECK(io::tiling_from_json(io::to_json(t)) == t);
    CHECK(io::vector_set_from_json(io::to_json(t)) == t.tile);

    const Poset p(4, {{1, 2}, {2, 3}, {1, 4}});
    CHECK(io::poset_from_json(io::to_json(p)) == p);
    CHECK(io::to_json(Poset::antichain(3)).dump() == R"({"n":3,"covers":[]})");
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n":2,"covers":[[1,2],[2,1]]})")), io::FormatError);
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n":2,"covers":[[1]]})")), io::FormatError);

    const Covering f(3, std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(io::covering_from_json(io::to_json(f)) == f);
    CHECK_THROWS_AS(io::covering_from_json(json::parse(R"({"n":3,"blocks":[[1,2]]})")), io::FormatError);

    const WeightTable w(2, {0, 1, 1, 2});
    CHECK(io::weight_table_from_json(io::to_json(w)) == w);
    CHECK_THROWS_AS(io::weight_table_from_json(json::parse(R"({"n":2,"weights":[0,1,1]})")), io::FormatError);
}

TEST_CASE("verdicts carry witnesses") {
    const TilingVerdict v = verify_tiling(2, VectorSet::from_strings({"00", "01"}), VectorSet::from_strings({"00", "01"}));
    const json j = io::to_json(v, 2);
    CHECK(j["valid"] == false);
    CHECK(j["failure"] == "uncovered");
    CHECK(j["point"] == "10");

    const json no = io::to_json(is_ts_ball(VectorSet::from_strings({"00", "11"})), 2);
    CHECK(no["status"] == "no");
    CHECK(no["witness"]["member"] == "11");
    CHECK(no["witness"]["missing"] == "01");
}

TEST_CASE("classification report") {
    const auto records = classify_small_tiles(4);
    const json j = io::to_json(records);
    REQUIRE(j.size() == 2);
    for (const auto& rec : j) {
        CHECK(rec.contains("tile"));
        CHECK(rec["size"] == 4);
        CHECK(rec["ts"]["status"] == "yes");
        CHECK(rec["realizations"][0]["kind"] == "poset");
        CHECK(rec["realizations"][0]["object"].contains("covers"));
    }
    const std::string table = io::render_table(records);
    CHECK(table.find("{0, e1, e2, e3}") != std::string::npos);
    CHECK(table.find("B2 poset") != std::string::npos);
}
