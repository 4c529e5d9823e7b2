#ifndef TSPERFECT_METRICS_HPP
#define TSPERFECT_METRICS_HPP

// Weights on F_2^n and the translation-invariant metrics they induce.
//
// Every metric handled here is integer valued and translation invariant, so it
// is represented by its weight table w[v] = d(v, 0) over all 2^n points.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tsperfect/hypercube.hpp"

namespace tsperfect {

using weight_t = std::int32_t;

/// A partial order on [n], kept as its reflexive-transitive closure.
class Poset {
public:
    /// Builds the closure of the given 1-based cover pairs (a, b), meaning
    /// a <= b. Throws on out-of-range elements or cycles.
    Poset(int n, const std::vector<std::pair<int, int>>& covers);

    /// Validates reflexivity, antisymmetry and transitivity of the given
    /// down-set masks (down_sets[b-1] = {a : a <= b}).
    static Poset from_down_sets(int n, std::vector<word_t> down_sets);

    static Poset antichain(int n) { return {n, {}}; }
    /// 1 <= 2 <= ... <= n.
    static Poset chain(int n);

    int size() const noexcept { return n_; }
    bool leq(int a, int b) const noexcept { return (down_[b - 1] >> (a - 1)) & 1u; }
    /// Bit mask of {b : b <= a}.
    word_t down_set(int a) const noexcept { return down_[a - 1]; }
    /// Order ideal generated by the coordinates in `mask`.
    word_t ideal(word_t mask) const noexcept;
    /// Hasse diagram as 1-based pairs (a, b) with b covering a, sorted.
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    Poset() = default;

    int n_ = 0;
    std::vector<word_t> down_;
};

/// A family of subsets of [n] whose union is [n].
class Covering {
public:
    /// Blocks are 1-based coordinate lists. Throws if a block is empty or out
    /// of range, if two blocks coincide, or if the union misses a coordinate.
    Covering(int n, const std::vector<std::vector<int>>& blocks);
    Covering(int n, std::vector<word_t> block_masks);

    static Covering singletons(int n);

    int size() const noexcept { return n_; }
    const std::vector<word_t>& blocks() const noexcept { return blocks_; }
    std::vector<std::vector<int>> block_lists() const;

    friend bool operator==(const Covering&, const Covering&) = default;

private:
    int n_ = 0;
    std::vector<word_t> blocks_;
};

/// A full table of values over F_2^n. No weight axioms are enforced on
/// construction; see validate_weight.
class WeightTable {
public:
    WeightTable() = default;
    WeightTable(int n, std::vector<weight_t> values);

    int dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }
    weight_t operator[](word_t v) const noexcept { return values_[v]; }
    weight_t at(const BitVector& v) const;
    const std::vector<weight_t>& values() const noexcept { return values_; }
    weight_t max_value() const noexcept;

    friend bool operator==(const WeightTable&, const WeightTable&) = default;

private:
    int n_ = 0;
    std::vector<weight_t> values_;
};

weight_t poset_weight(const Poset& p, const BitVector& v);
weight_t comb_weight(const Covering& f, const BitVector& v);

enum class ViolationKind { negative, nonzero_at_origin, zero_off_origin, triangle, support };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// For triangle: w[u ^ v] > w[u] + w[v]. For support: supp(u) inside
    /// supp(v) but w[u] > w[v]. For the axiom 1/2 kinds only `u` is meaningful.
    word_t u = 0;
    word_t v = 0;
};

struct WeightVerdict {
    std::optional<Violation> weight_violation;
    std::optional<Violation> support_violation;

    bool is_weight() const noexcept { return !weight_violation; }
    bool respects_support() const noexcept { return !support_violation; }
    bool is_ts() const noexcept { return is_weight() && respects_support(); }
};

/// Checks the weight axioms (exhaustive O(4^n) triangle scan) and the
/// support-respect property separately. Violations are the first found in
/// increasing (u, v) order with u < v.
WeightVerdict validate_weight(const WeightTable& w);

/// Thrown when a constructed table fails the weight axioms.
class WeightAxiomError : public std::invalid_argument {
public:
    WeightAxiomError(const std::string& what, Violation violation)
        : std::invalid_argument(what), violation_(violation) {}
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

/// Materialize and validate; throws WeightAxiomError with the witness.
WeightTable table_from(const Poset& p);
WeightTable table_from(const Covering& f);
WeightTable table_from(int n, std::vector<weight_t> values);

/// {y : w[y ^ center] <= r}
VectorSet ball(const WeightTable& w, const BitVector& center, weight_t r);
VectorSet ball(const WeightTable& w, weight_t r);

/// w[0] = 0, 1 on D \ {0}, 2 elsewhere. Requires 0 in D and D downward closed.
WeightTable two_level_weight(const VectorSet& d);

struct TsBallYes {
    WeightTable weights;
    weight_t radius;
};

struct TsBallNo {
    word_t member;   // in D
    word_t missing;  // not in D, supp(missing) inside supp(member)
};

using TsBallVerdict = std::variant<TsBallYes, TsBallNo>;

/// D is a ball of some TS-metric iff it is downward closed (given 0 in D).
/// Throws if D is empty or does not contain 0.
TsBallVerdict is_ts_ball(const VectorSet& d);

/// Extends w from F_2^s to F_2^n: w(x) on supp(x) inside [s], max(w) + 1 elsewhere.
WeightTable extend_weight(const WeightTable& w, int n);

/// w(x1 | x2) = max(scale1 * w1[x1], scale2 * w2[x2]).
WeightTable max_weight(const WeightTable& w1, const WeightTable& w2, weight_t scale1 = 1,
                       weight_t scale2 = 1);

struct SSumResult {
    WeightTable table;
    WeightVerdict verdict;
};

/// w1[x1] + w2[x2] on B1(0,r) | B2(0,s), r + s + 1 elsewhere, with r <= s.
/// The result is NOT guaranteed to be a weight; the verdict says whether it is.
SSumResult s_sum_literal(const WeightTable& w1, weight_t r, const WeightTable& w2, weight_t s);

struct EquivalenceResult {
    bool equivalent = true;
    /// (a, b) with w1[a] < w1[b] (or a tie under w1) and disagreeing under w2.
    std::optional<std::pair<word_t, word_t>> witness;
};

/// Decoding equivalence of two translation-invariant metrics: strict order
/// agreement of their weights over all pairs.
EquivalenceResult decoding_equivalent(const WeightTable& w1, const WeightTable& w2);

/// Replaces the i-th smallest of the k distinct nonzero values by k + i - 1.
/// Always a weight, order preserving. Requires values[0] == 0, others > 0.
WeightTable metrize_by_rank(const WeightTable& values);

inline constexpr int kMaxMatrixDimension = 12;

/// Full N x N distance matrix, N = 2^n.
class MetricMatrix {
public:
    MetricMatrix(int n, std::vector<weight_t> entries);

    int dim() const noexcept { return n_; }
    std::size_t order() const noexcept { return std::size_t{1} << n_; }
    weight_t operator()(word_t x, word_t y) const noexcept { return m_[x * order() + y]; }
    void set(word_t x, word_t y, weight_t value) { m_[x * order() + y] = value; }
    /// m[x][0] for all x.
    WeightTable first_column() const;

private:
    int n_;
    std::vector<weight_t> m_;
};

/// m[x][y] = w[x ^ y].
MetricMatrix matrix_from_weight(const WeightTable& w);

enum class MatrixCondition { c1, c2, c3 };

struct MatrixVerdict {
    std::optional<MatrixCondition> failed;
    word_t x = 0;
    word_t y = 0;

    bool ok() const noexcept { return !failed; }
};

/// C1: m[x][0] = d_ref(x) on D. C2: m[x][0] > r off D. C3: m[x][y] = m[x^y][0].
/// Checked in that order; the first violation is reported.
MatrixVerdict validate_c1c2c3(const MetricMatrix& m, const VectorSet& d, weight_t r,
                              const WeightTable& d_ref);

}  // namespace tsperfect

#endif  // TSPERFECT_METRICS_HPP
