#ifndef TSPERFECT_TESTS_ORACLES_HPP
#define TSPERFECT_TESTS_ORACLES_HPP

// Slow, obviously-correct reference implementations. None of them share code
// with the library beyond the bit conventions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using word = std::uint32_t;

inline int popcount(word w) {
    int c = 0;
    for (; w; w >>= 1) c += w & 1u;
    return c;
}

/// Minimum number of blocks whose union contains `target`, by trying every
/// subset of blocks in order of size.
inline int set_cover(const std::vector<word>& blocks, word target) {
    if (target == 0) return 0;
    const std::size_t m = blocks.size();
    int best = -1;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
        word u = 0;
        int count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if ((pick >> i) & 1u) {
                u |= blocks[i];
                ++count;
            }
        }
        if ((u & target) == target && (best < 0 || count < best)) best = count;
    }
    return best;
}

/// Order ideal of `mask` given leq[a][b] (0-based, a <= b), by iterating the
/// relation to a fixpoint.
inline word ideal(const std::vector<std::vector<bool>>& leq, word mask) {
    const int n = static_cast<int>(leq.size());
    word cur = mask;
    while (true) {
        word next = cur;
        for (int b = 0; b < n; ++b) {
            if (!((cur >> b) & 1u)) continue;
            for (int a = 0; a < n; ++a) {
                if (leq[a][b]) next |= word{1} << a;
            }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

/// Reflexive-transitive closure of 0-based cover pairs by Floyd-Warshall.
inline std::vector<std::vector<bool>> closure(int n, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [a, b] : covers) leq[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    return leq;
}

/// Enumerates every ordering of the differing coordinates and walks it.
inline bool geodesic(const std::set<word>& s, word x, word y) {
    std::vector<int> diff;
    for (int b = 0; b < 32; ++b) {
        if (((x ^ y) >> b) & 1u) diff.push_back(b);
    }
    do {
        word cur = x;
        bool ok = s.count(cur) > 0;
        for (int b : diff) {
            cur ^= word{1} << b;
            ok = ok && s.count(cur) > 0;
        }
        if (ok) return true;
    } while (std::next_permutation(diff.begin(), diff.end()));
    return false;
}

/// Submask closure by definition: every y with y & ~x == 0, for every x.
inline bool downward_closed(const std::set<word>& s, int n) {
    for (word x : s) {
        for (word y = 0; y < (word{1} << n); ++y) {
            if ((y & ~x) == 0 && !s.count(y)) return false;
        }
    }
    return true;
}

/// Plain backtracking exact cover of F_2^n by translates of `tile`: always
/// cover the lowest uncovered point, trying translates in increasing order of
/// codeword. The first solution found is the lexicographically least code.
inline std::optional<std::vector<word>> tiling(int n, const std::vector<word>& tile) {
    const word points = word{1} << n;
    if (points % tile.size() != 0) return std::nullopt;
    std::vector<bool> covered(points, false);
    std::vector<word> code;
    auto lowest = [&]() -> std::optional<word> {
        for (word p = 0; p < points; ++p)
            if (!covered[p]) return p;
        return std::nullopt;
    };
    std::vector<word> candidates(points);
    std::iota(candidates.begin(), candidates.end(), word{0});
    // Search over sets of codewords in increasing order: the least set is the
    // first complete one when codewords are added in increasing order and the
    // search enumerates subsets lexicographically.
    std::optional<std::vector<word>> found;
    auto fits = [&](word c) {
        return std::none_of(tile.begin(), tile.end(), [&](word d) { return covered[c ^ d]; });
    };
    auto set = [&](word c, bool v) {
        for (word d : tile) covered[c ^ d] = v;
    };
    const std::size_t need = points / tile.size();
    auto rec = [&](auto&& self, word from) -> bool {
        if (code.size() == need) return !lowest().has_value();
        // Prune: the lowest uncovered point must be covered by some later codeword.
        const auto p = lowest();
        if (!p) return true;
        bool coverable = false;
        for (word d : tile) {
            const word c = *p ^ d;
            if (c >= from && fits(c)) coverable = true;
        }
        if (!coverable) return false;
        for (word c = from; c < points; ++c) {
            if (!fits(c)) continue;
            set(c, true);
            code.push_back(c);
            if (self(self, c + 1)) return true;
            code.pop_back();
            set(c, false);
        }
        return false;
    };
    if (rec(rec, 0)) found = code;
    return found;
}

}  // namespace oracle

#endif
