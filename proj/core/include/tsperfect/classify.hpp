#ifndef TSPERFECT_CLASSIFY_HPP
#define TSPERFECT_CLASSIFY_HPP

// Classification of small tiles up to coordinate permutation: which are
// tiles, which are TS-balls, and which poset or combinatorial metrics make
// them balls.

#include <string>
#include <variant>
#include <vector>

#include "tsperfect/hypercube.hpp"
#include "tsperfect/metrics.hpp"

namespace tsperfect {

enum class RealizationKind { poset, combinatorial };

std::string to_string(RealizationKind kind);

struct Realization {
    std::variant<Poset, Covering> metric;
    weight_t radius;
    /// Where the realization came from, e.g. a reference tile name.
    std::string label;

    RealizationKind kind() const noexcept {
        return std::holds_alternative<Poset>(metric) ? RealizationKind::poset : RealizationKind::combinatorial;
    }
    WeightTable table() const;
};

struct ClassificationRecord {
    VectorSet tile;  // canonical form, dimension == rank
    int size = 0;
    int rank = 0;
    bool is_tile = false;
    TsBallVerdict ts;
    std::vector<Realization> realizations;

    bool is_ts_ball() const noexcept { return std::holds_alternative<TsBallYes>(ts); }
};

/// Down-sets containing 0 with `size` elements, spanning F_2^s for some
/// s <= max_rank, one per permutation class, canonically sorted.
/// Throws unless size is 2, 4 or 8 and max_rank <= 7.
std::vector<VectorSet> enumerate_downward_closed(int size, int max_rank);

/// A record for an arbitrary tile containing 0: rank, exact-cover tilability
/// decided in F_2^rank and TS status. The tile is reduced to its span and
/// canonicalized first.
ClassificationRecord classify_tile(const VectorSet& tile);

struct ClassifyOptions {
    bool realize_posets = false;
    bool realize_coverings = false;
    bool allow_rank7_posets = false;
    int max_blocks = 0;        // 0: use the rank
    int max_block_size = 2;
};

/// Classifies every enumerated candidate of the given size and attaches the
/// verified reference realizations, plus searched ones if requested.
std::vector<ClassificationRecord> classify_small_tiles(int size, const ClassifyOptions& options = {});

/// All posets P on [dim(D)] and radii 1 <= r <= max weight with
/// ball(w_P, 0, r) == D. Needs dim(D) <= 6 unless allow_rank7.
std::vector<Realization> realize_poset(const VectorSet& d, bool allow_rank7 = false);

/// All coverings of [dim(D)] by at most max_blocks distinct blocks of size at
/// most max_block_size, with the radii realizing D as a ball.
std::vector<Realization> realize_combinatorial(const VectorSet& d, int max_blocks, int max_block_size);

/// Every labeled partial order on [n] (n <= 7).
std::vector<Poset> enumerate_posets(int n);

// Known size-8 TS-ball tiles and the metrics that realize them.

struct ReferenceTile {
    std::string name;   // "D1^3", ...
    VectorSet tile;     // in its own labeling, dimension == rank
    Realization witness;
};

/// The six size-8 tiles that are TS-balls, each with a realizing metric.
const std::vector<ReferenceTile>& reference_tiles();

/// The size-8 tile shown not to be a TS-ball, {0,e1..e4,e1+e3,e1+e4,e1+e3+e4}.
VectorSet rejected_example();

enum class SmallBall { b1, b2, b3 };

/// The small balls {0,e_i}, {0,e_i,e_j,e_k}, {0,e_i,e_j,e_i+e_j} with i,j,k the
/// first coordinates, embedded in F_2^n.
VectorSet small_ball(SmallBall kind, int n);

/// Poset on [n] realizing small_ball(kind, n): the first coordinates of the
/// ball lie below every other coordinate.
Realization small_ball_poset(SmallBall kind, int n);

/// Transports a realization along a coordinate permutation.
Realization permute(const Realization& r, const Permutation& perm);

}  // namespace tsperfect

#endif  // TSPERFECT_CLASSIFY_HPP
