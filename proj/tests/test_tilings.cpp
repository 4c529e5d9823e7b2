#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tsperfect/exact_cover.hpp"
#include "tsperfect/tilings.hpp"

using namespace tsperfect;

namespace {

word_t e(int i) { return unit(i); }

WeightTable hamming(int n) {
    std::vector<weight_t> v(std::size_t{1} << n);
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = hamming_weight(static_cast<word_t>(x));
    return WeightTable(n, v);
}

VectorSet hamming_ball7() { return VectorSet(7, {0, e(1), e(2), e(3), e(4), e(5), e(6), e(7)}); }

// Brute force over all row subsets.
bool has_exact_cover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows) {
    for (std::uint32_t pick = 0; pick < (1u << rows.size()); ++pick) {
        std::vector<int> hits(columns, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((pick >> r) & 1u)
                for (auto c : rows[r]) ++hits[c];
        if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("exact cover agrees with brute force") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t columns = 3 + trial % 5;
        const std::size_t nrows = 2 + rng() % 9;
        std::vector<std::vector<std::uint32_t>> rows;
        ExactCover ec(columns);
        for (std::size_t r = 0; r < nrows; ++r) {
            std::vector<std::uint32_t> row;
            for (std::uint32_t c = 0; c < columns; ++c)
                if (rng() % 3 == 0) row.push_back(c);
            if (row.empty()) row.push_back(rng() % columns);
            rows.push_back(row);
            ec.add_row(row);
        }
        const auto sol = ec.solve();
        CHECK(sol.has_value() == has_exact_cover(columns, rows));
        if (sol) {
            std::vector<int> hits(columns, 0);
            for (auto r : *sol)
                for (auto c : rows[r]) ++hits[c];
            CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
        // The structure is restored after solving.
        CHECK(ec.solve().has_value() == sol.has_value());
    }
}

TEST_CASE("exact cover with forced and excluded rows") {
    ExactCover ec(4);
    const std::vector<std::vector<std::uint32_t>> rows{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}};
    for (const auto& r : rows) ec.add_row(r);
    const std::size_t f2[] = {2}, f12[] = {1, 2}, x0[] = {0}, x02[] = {0, 2};
    CHECK(*ec.solve(f2) == std::vector<std::size_t>{2, 3});
    CHECK_FALSE(ec.solve(f12).has_value());
    CHECK(*ec.solve({}, x0) == std::vector<std::size_t>{2, 3});
    CHECK_FALSE(ec.solve({}, x02).has_value());
    CHECK(*ec.solve() == std::vector<std::size_t>{0, 1});
    const std::uint32_t bad[] = {4};
    CHECK_THROWS_AS(ec.add_row(bad), std::invalid_argument);
}

TEST_CASE("verify_tiling") {
    // Trivial coordinate split: D_I free on I = {1,2}, C free on the rest.
    const int n = 4;
    std::vector<word_t> dw, cw;
    for (word_t v = 0; v < 16; ++v) {
        if ((v & 0b1100) == 0) dw.push_back(v);
        if ((v & 0b0011) == 0) cw.push_back(v);
    }
    CHECK(verify_tiling(n, VectorSet(n, dw), VectorSet(n, cw)).valid());

    CHECK(verify_tiling(2, VectorSet::from_strings({"00", "01"}), VectorSet::from_strings({"00", "10"})).valid());

    const TilingVerdict bad = verify_tiling(2, VectorSet::from_strings({"00", "01"}), VectorSet::from_strings({"00", "01"}));
    CHECK(bad.failure == TilingFailure::uncovered);
    CHECK(BitVector(2, bad.point).to_string() == "10");

    const TilingVerdict over = verify_tiling(2, VectorSet::from_strings({"00", "01"}),
                                             VectorSet::from_strings({"00", "01", "10"}));
    CHECK(over.failure == TilingFailure::overlap);
    CHECK(over.cardinality_mismatch);

    // Cardinality product holds but translates overlap.
    const TilingVerdict same = verify_tiling(2, VectorSet::from_strings({"00", "11"}),
                                             VectorSet::from_strings({"00", "11"}));
    CHECK_FALSE(same.valid());
    CHECK_FALSE(same.cardinality_mismatch);

    CHECK(verify_tiling(3, VectorSet(2, {0}), VectorSet(3, {0})).failure == TilingFailure::dimension);
}

TEST_CASE("complete_tiling") {
    const Completion h = complete_tiling(7, hamming_ball7());
    REQUIRE(h.code);
    CHECK(h.code->size() == 16);
    CHECK(verify_tiling(7, hamming_ball7(), *h.code).valid());

    const Completion whole = complete_tiling(2, VectorSet::whole_space(2));
    REQUIRE(whole.code);
    CHECK(*whole.code == VectorSet(2, {0}));

    CHECK_FALSE(complete_tiling(6, dn_tile(6, BitVector(6, 0b1111))).code);
    CHECK_FALSE(complete_tiling(3, VectorSet(3, {0, 1, 2})).code);
    CHECK_FALSE(complete_tiling(3, VectorSet(3, {0, 1, 2})).reason.empty());
    CHECK_THROWS_AS(complete_tiling(3, VectorSet(3, {1, 2})), std::invalid_argument);

    // Embedded tile of lower dimension.
    const Completion emb = complete_tiling(3, VectorSet(2, {0, 1}));
    REQUIRE(emb.code);
    CHECK(verify_tiling(3, VectorSet(3, {0, 1}), *emb.code).valid());
}

TEST_CASE("complete_tiling returns the least code found by a plain backtracking oracle") {
    std::mt19937 rng(29);
    int tiles = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + trial % 2;
        const int size = trial % 3 == 0 ? 2 : 4;
        std::vector<word_t> words{0};
        while (static_cast<int>(words.size()) < size) {
            const word_t w = rng() & full_mask(n);
            if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
        }
        const VectorSet d(n, words);
        const Completion got = complete_tiling(n, d);
        const auto expect = oracle::tiling(n, std::vector<word_t>(d.begin(), d.end()));
        REQUIRE(got.code.has_value() == expect.has_value());
        if (expect) {
            ++tiles;
            CHECK(std::vector<word_t>(got.code->begin(), got.code->end()) == *expect);
        }
    }
    CHECK(tiles > 10);
}

TEST_CASE("tilability is invariant under coordinate permutations") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<word_t> words{0};
        while (words.size() < 4) {
            const word_t w = rng() & 31u;
            if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
        }
        const VectorSet d(5, words);
        Permutation p = Permutation::identity(5);
        std::shuffle(p.image.begin(), p.image.end(), rng);
        CHECK(complete_tiling(5, d).code.has_value() == complete_tiling(5, p.apply(d)).code.has_value());
    }
}

TEST_CASE("perfect codes") {
    const VectorSet code = *complete_tiling(7, hamming_ball7()).code;
    CHECK(verify_perfect(code, hamming(7), 1).valid());
    const TilingVerdict r2 = verify_perfect(code, hamming(7), 2);
    CHECK(r2.failure == TilingFailure::overlap);
    CHECK(r2.first_codeword != r2.second_codeword);
    CHECK_THROWS_AS(verify_perfect(code, hamming(7), 0), std::invalid_argument);

    // Trivial split with the two-level weight of its tile.
    std::vector<word_t> dw, cw;
    for (word_t v = 0; v < 16; ++v) {
        if ((v & 0b1100) == 0) dw.push_back(v);
        if ((v & 0b0011) == 0) cw.push_back(v);
    }
    CHECK(verify_perfect(VectorSet(4, cw), two_level_weight(VectorSet(4, dw)), 1).valid());
}

TEST_CASE("the D_n(x) family") {
    const VectorSet d = dn_tile(6, BitVector::parse("110000"));
    CHECK(d.size() == 8);
    CHECK(d == VectorSet(6, {0, e(1), e(2), e(3), e(4), e(5), e(6), e(1) | e(2)}));
    CHECK(dn_tile(6, BitVector::parse("111111")).contains(word_t{63}));
    CHECK_THROWS_AS(dn_tile(6, BitVector::parse("100000")), std::invalid_argument);
    for (int n = 4; n <= 7; ++n) {
        for (word_t x = 0; x <= full_mask(n); ++x) {
            if (hamming_weight(x) < 2) continue;
            CHECK(dn_tile(n, BitVector(n, x)).size() == static_cast<std::size_t>(n + 2));
        }
    }

    CHECK(dn_is_tile(6, BitVector::parse("110000")));
    CHECK_FALSE(dn_is_tile(6, BitVector::parse("111110")));
    CHECK(dn_is_tile(6, BitVector::parse("111000")));

    const DnTsVerdict two = dn_ts_perfect(6, BitVector::parse("010100"));
    REQUIRE(std::holds_alternative<DnTsYes>(two));
    const Covering& f = std::get<DnTsYes>(two).covering;
    CHECK(ball(table_from(f), 1) == dn_tile(6, BitVector::parse("010100")));

    const DnTsVerdict three = dn_ts_perfect(6, BitVector::parse("111000"));
    REQUIRE(std::holds_alternative<DnTsNo>(three));
    REQUIRE(std::get<DnTsNo>(three).missing_submask);
    const word_t miss = *std::get<DnTsNo>(three).missing_submask;
    CHECK((miss & ~word_t{0b111}) == 0);
    CHECK_FALSE(dn_tile(6, BitVector::parse("111000")).contains(miss));
}

TEST_CASE("extension and concatenation of tilings") {
    const VectorSet d14(4, {0, e(1), e(2), e(3), e(4), e(1) | e(2), e(1) | e(3), e(1) | e(4)});
    const Tiling t{4, d14, *complete_tiling(4, d14).code};
    const Tiling x = extend_tiling(t, 6);
    CHECK(x.tile == embed(d14, 6));
    CHECK(x.code.size() == 4 * t.code.size());
    CHECK(verify_tiling(x).valid());
    CHECK(extend_tiling(t, 4) == t);
    CHECK_THROWS_AS(extend_tiling(t, 3), std::invalid_argument);

    const VectorSet rep(3, {0, e(1), e(2), e(3)});
    const Tiling r{3, rep, VectorSet(3, {0, 7})};
    const Tiling rr = concat_tiling(r, r);
    CHECK(rr.tile.size() == 16);
    CHECK(rr.code.size() == 4);
    CHECK(verify_tiling(rr).valid());

    const Tiling whole{2, VectorSet::whole_space(2), VectorSet(2, {0})};
    CHECK(concat_tiling(r, whole).tile == concat(rep, VectorSet::whole_space(2)));

    const Tiling h{7, hamming_ball7(), *complete_tiling(7, hamming_ball7()).code};
    const Tiling hh = concat_tiling(h, h);
    CHECK(hh.n == 14);
    CHECK(hh.code.size() == 256);
    CHECK(verify_tiling(hh).valid());

    CHECK_THROWS_AS(concat_tiling(r, Tiling{3, rep, VectorSet(3, {0})}), std::invalid_argument);
}

TEST_CASE("concatenated tile is a polyhedromino iff both parts are") {
    const VectorSet poly(2, {0, 1, 2});
    const VectorSet gap(2, {0, 3});
    CHECK(is_polyhedromino(concat(poly, poly)));
    CHECK_FALSE(is_polyhedromino(concat(poly, gap)));
    CHECK_FALSE(is_polyhedromino(concat(gap, poly)));
}

TEST_CASE("span reduction") {
    const SpanReduction r = reduce_to_span(VectorSet(5, {0, 0b00011, 0b01100, 0b01111}));
    CHECK(r.reduced.dim() == 2);
    CHECK(r.reduced.size() == 4);
    CHECK(r.basis.size() == 2);
    CHECK(complete_tiling(2, r.reduced).code.has_value());
}
