#include "tsperfect/tilings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tsperfect/exact_cover.hpp"

namespace tsperfect {

std::string to_string(TilingFailure failure) {
    switch (failure) {
        case TilingFailure::none: return "none";
        case TilingFailure::dimension: return "dimension";
        case TilingFailure::uncovered: return "uncovered";
        case TilingFailure::overlap: return "overlap";
    }
    return "unknown";
}

TilingVerdict verify_tiling(int n, const VectorSet& tile, const VectorSet& code) {
    check_dimension(n);
    TilingVerdict verdict;
    if (tile.dim() != n || code.dim() != n) {
        verdict.failure = TilingFailure::dimension;
        return verdict;
    }
    const std::size_t points = std::size_t{1} << n;
    verdict.cardinality_mismatch = tile.size() * code.size() != points;

    constexpr word_t kNone = ~word_t{0};
    std::vector<word_t> first(points, kNone);
    std::vector<word_t> second(points, kNone);
    for (word_t c : code) {
        for (word_t d : tile) {
            const word_t p = c ^ d;
            if (first[p] == kNone) {
                first[p] = c;
            } else if (second[p] == kNone) {
                second[p] = c;
            }
        }
    }

    auto report_uncovered = [&] {
        for (std::size_t p = 0; p < points; ++p) {
            if (first[p] == kNone) {
                verdict.failure = TilingFailure::uncovered;
                verdict.point = static_cast<word_t>(p);
                return true;
            }
        }
        return false;
    };
    auto report_overlap = [&] {
        for (std::size_t p = 0; p < points; ++p) {
            if (second[p] != kNone) {
                verdict.failure = TilingFailure::overlap;
                verdict.point = static_cast<word_t>(p);
                verdict.first_codeword = first[p];
                verdict.second_codeword = second[p];
                return true;
            }
        }
        return false;
    };

    if (tile.size() * code.size() > points) {
        report_overlap() || report_uncovered();
    } else {
        report_uncovered() || report_overlap();
    }
    return verdict;
}

TilingVerdict verify_tiling(const Tiling& t) { return verify_tiling(t.n, t.tile, t.code); }

Completion complete_tiling(int n, const VectorSet& tile_in) {
    check_dimension(n);
    if (tile_in.dim() > n) throw std::invalid_argument("tile dimension exceeds ambient dimension");
    if (!tile_in.contains(word_t{0})) throw std::invalid_argument("tile must contain 0");
    const VectorSet tile = embed(tile_in, n);

    const std::size_t points = std::size_t{1} << n;
    if (points % tile.size() != 0) {
        return {std::nullopt, "|D| = " + std::to_string(tile.size()) + " does not divide 2^" + std::to_string(n)};
    }
    const std::size_t code_size = points / tile.size();

    // Row c is the translate c + D; columns are the points of F_2^n.
    ExactCover matrix(points);
    std::vector<std::uint32_t> cols(tile.size());
    for (std::size_t c = 0; c < points; ++c) {
        std::size_t k = 0;
        for (word_t d : tile) cols[k++] = static_cast<std::uint32_t>(c ^ d);
        matrix.add_row(cols);
    }

    std::vector<std::size_t> prefix{0};
    auto solution = matrix.solve(prefix);
    if (!solution) return {std::nullopt, "no tiling of F_2^" + std::to_string(n) + " by translates of D"};

    // Grow the lexicographically least code one element at a time: the next
    // element is the smallest candidate that still admits a completion with
    // every skipped candidate excluded. The last solution found bounds it.
    std::vector<bool> covered(points, false);
    for (word_t d : tile) covered[d] = true;
    std::vector<std::size_t> excluded;
    while (prefix.size() < code_size) {
        std::size_t bound = points;
        for (std::size_t r : *solution) {
            if (!std::binary_search(prefix.begin(), prefix.end(), r)) {
                bound = r;
                break;
            }
        }
        std::size_t chosen = bound;
        for (std::size_t c = prefix.back() + 1; c < bound; ++c) {
            const bool clashes = std::any_of(tile.begin(), tile.end(), [&](word_t d) { return covered[c ^ d]; });
            if (!clashes) {
                std::vector<std::size_t> forced = prefix;
                forced.push_back(c);
                if (auto found = matrix.solve(forced, excluded)) {
                    solution = std::move(found);
                    chosen = c;
                    break;
                }
            }
            excluded.push_back(c);
        }
        prefix.push_back(chosen);
        for (word_t d : tile) covered[chosen ^ d] = true;
    }

    std::vector<word_t> code(prefix.begin(), prefix.end());
    return {VectorSet(n, std::move(code)), {}};
}

TilingVerdict verify_perfect(const VectorSet& code, const WeightTable& w, weight_t r) {
    if (r <= 0) throw std::invalid_argument("perfect-code radius must be positive");
    return verify_tiling(w.dim(), ball(w, r), code);
}

VectorSet dn_tile(int n, const BitVector& x) {
    if (x.dim() != n) throw std::invalid_argument("dimension mismatch in D_n(x)");
    if (hamming_weight(x) < 2) throw std::invalid_argument("D_n(x) needs wt(x) >= 2");
    std::vector<word_t> words{0, x.bits()};
    for (int i = 1; i <= n; ++i) words.push_back(unit(i));
    return {n, std::move(words)};
}

bool dn_is_tile(int n, const BitVector& x) {
    if (x.dim() != n) throw std::invalid_argument("dimension mismatch in D_n(x)");
    const int w = hamming_weight(x);
    if (w < 2) throw std::invalid_argument("D_n(x) needs wt(x) >= 2");
    return w != n - 1 && w != n - 2;
}

DnTsVerdict dn_ts_perfect(int n, const BitVector& x) {
    const bool tile = dn_is_tile(n, x);
    const int w = hamming_weight(x);
    if (w > 2) {
        // Two coordinates of supp(x): a proper submask that D_n(x) lacks.
        word_t low = x.bits() & -x.bits();
        word_t rest = x.bits() ^ low;
        const word_t missing = low | (rest & -rest);
        return DnTsNo{"wt(x) = " + std::to_string(w) + " > 2, so D_n(x) is not downward closed", missing};
    }
    if (!tile) return DnTsNo{"not a tile: wt(x) = " + std::to_string(w) + " is n-1 or n-2", std::nullopt};
    std::vector<word_t> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back(unit(i));
    blocks.push_back(x.bits());
    return DnTsYes{Covering(n, std::move(blocks))};
}

Tiling extend_tiling(const Tiling& t, int n) {
    if (n < t.n) throw std::invalid_argument("cannot extend a tiling to a smaller dimension");
    check_dimension(n);
    if (n == t.n) return t;
    return {n, embed(t.tile, n), concat(t.code, VectorSet::whole_space(n - t.n))};
}

Tiling concat_tiling(const Tiling& left, const Tiling& right) {
    if (!verify_tiling(left).valid()) throw std::invalid_argument("left operand is not a tiling");
    if (!verify_tiling(right).valid()) throw std::invalid_argument("right operand is not a tiling");
    return {left.n + right.n, concat(left.tile, right.tile), concat(left.code, right.code)};
}

SpanReduction reduce_to_span(const VectorSet& s) {
    // pivot[b]: reduced vector with leading bit b; combo[b]: which basis
    // members it is the sum of.
    word_t pivot[32] = {};
    word_t combo[32] = {};
    std::vector<word_t> basis;

    auto express = [&](word_t v, word_t& coords) {
        coords = 0;
        for (int b = 31; b >= 0 && v; --b) {
            if (((v >> b) & 1u) && pivot[b]) {
                v ^= pivot[b];
                coords ^= combo[b];
            }
        }
        return v;
    };

    for (word_t v : s) {
        word_t coords = 0;
        const word_t residue = express(v, coords);
        if (residue == 0) continue;
        const int lead = 31 - std::countl_zero(residue);
        pivot[lead] = residue;
        combo[lead] = coords ^ (word_t{1} << basis.size());
        basis.push_back(v);
    }

    const int r = static_cast<int>(basis.size());
    if (r == 0) return {VectorSet(1, {0}), {}};
    std::vector<word_t> reduced;
    for (word_t v : s) {
        word_t coords = 0;
        express(v, coords);
        reduced.push_back(coords);
    }
    return {VectorSet(r, std::move(reduced)), std::move(basis)};
}

}  // namespace tsperfect
