#ifndef TSPERFECT_TILINGS_HPP
#define TSPERFECT_TILINGS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsperfect/hypercube.hpp"
#include "tsperfect/metrics.hpp"

namespace tsperfect {

/// A tile D and a code C whose translates c + D partition F_2^n.
struct Tiling {
    int n = 1;
    VectorSet tile;
    VectorSet code;

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

enum class TilingFailure { none, dimension, uncovered, overlap };

std::string to_string(TilingFailure failure);

struct TilingVerdict {
    TilingFailure failure = TilingFailure::none;
    /// |D| * |C| != 2^n. Reported alongside a point witness.
    bool cardinality_mismatch = false;
    word_t point = 0;
    /// For overlaps, the two codewords whose translates both hit `point`.
    word_t first_codeword = 0;
    word_t second_codeword = 0;

    bool valid() const noexcept { return failure == TilingFailure::none; }
};

/// Marks all 2^n points. If |D||C| > 2^n an overlap is reported, otherwise the
/// first uncovered point takes precedence over the first doubly covered one.
TilingVerdict verify_tiling(int n, const VectorSet& tile, const VectorSet& code);
TilingVerdict verify_tiling(const Tiling& t);

struct Completion {
    std::optional<VectorSet> code;
    std::string reason;  // set when no code is returned
};

/// Decides whether translates of D tile F_2^n by exact cover. Returns the
/// lexicographically least code (as a sorted integer sequence) when one
/// exists. D must contain 0; a D of dimension below n is embedded as D | 0.
Completion complete_tiling(int n, const VectorSet& tile);

/// Perfect-code check: verify_tiling with D = ball(w, 0, r). Throws if r <= 0.
TilingVerdict verify_perfect(const VectorSet& code, const WeightTable& w, weight_t r);

/// D_n(x) = {0, e_1, ..., e_n, x}, requires wt(x) >= 2.
VectorSet dn_tile(int n, const BitVector& x);

/// Closed form: D_n(x) tiles F_2^n iff wt(x) is not n-1 or n-2.
bool dn_is_tile(int n, const BitVector& x);

struct DnTsYes {
    Covering covering;  // singletons plus {j, k}
};

struct DnTsNo {
    std::string reason;
    /// Present when wt(x) > 2: a vector with support inside supp(x) missing from D.
    std::optional<word_t> missing_submask;
};

using DnTsVerdict = std::variant<DnTsYes, DnTsNo>;

/// D_n(x) determines a TS-perfect code iff it is a tile and wt(x) == 2.
DnTsVerdict dn_ts_perfect(int n, const BitVector& x);

/// (D | 0_{n-s}, C | F_2^{n-s}).
Tiling extend_tiling(const Tiling& t, int n);

/// (D1 | D2, C1 | C2). Throws if either input is not a tiling.
Tiling concat_tiling(const Tiling& left, const Tiling& right);

/// Rewrites D in coordinates of a basis of its span. Returns the image in
/// F_2^rank together with the basis (as words of the original space).
struct SpanReduction {
    VectorSet reduced;
    std::vector<word_t> basis;
};
SpanReduction reduce_to_span(const VectorSet& s);

}  // namespace tsperfect

#endif  // TSPERFECT_TILINGS_HPP
