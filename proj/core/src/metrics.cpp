#include "tsperfect/metrics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace tsperfect {

namespace {

std::string vec_text(int n, word_t w) { return BitVector(n, w).to_string(); }

std::string describe(const Violation& v, int n) {
    switch (v.kind) {
        case ViolationKind::negative:
            return "negative value at " + vec_text(n, v.u);
        case ViolationKind::nonzero_at_origin:
            return "nonzero value at the zero vector";
        case ViolationKind::zero_off_origin:
            return "zero value at nonzero vector " + vec_text(n, v.u);
        case ViolationKind::triangle:
            return "triangle inequality fails for u=" + vec_text(n, v.u) + ", v=" + vec_text(n, v.v);
        case ViolationKind::support:
            return "support not respected: " + vec_text(n, v.u) + " outweighs " + vec_text(n, v.v);
    }
    return {};
}

void require_same_dim(const WeightTable& a, const WeightTable& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("weight tables of different dimensions");
}

}  // namespace

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(int n, const std::vector<std::pair<int, int>>& covers) : n_(n), down_(n) {
    check_dimension(n);
    for (int b = 1; b <= n; ++b) down_[b - 1] = unit(b);
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw std::invalid_argument("poset relation (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") out of range");
        }
        down_[b - 1] |= unit(a);
    }
    // Repeated squaring R <- R o R until stable.
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<word_t> next(n);
        for (int b = 0; b < n; ++b) {
            word_t acc = down_[b];
            for (word_t rest = down_[b]; rest; rest &= rest - 1) acc |= down_[std::countr_zero(rest)];
            next[b] = acc;
            changed |= acc != down_[b];
        }
        down_ = std::move(next);
    }
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (leq(a, b) && leq(b, a)) {
                throw std::invalid_argument("poset relations contain a cycle through " +
                                            std::to_string(a) + " and " + std::to_string(b));
            }
        }
    }
}

Poset Poset::from_down_sets(int n, std::vector<word_t> down_sets) {
    check_dimension(n);
    if (static_cast<int>(down_sets.size()) != n) throw std::invalid_argument("wrong number of down-sets");
    Poset p;
    p.n_ = n;
    p.down_ = std::move(down_sets);
    for (int b = 1; b <= n; ++b) {
        const word_t d = p.down_[b - 1];
        if (d & ~full_mask(n)) throw std::invalid_argument("down-set exceeds ground set");
        if (!(d & unit(b))) throw std::invalid_argument("relation is not reflexive");
        for (word_t rest = d; rest; rest &= rest - 1) {
            const int a = std::countr_zero(rest) + 1;
            if (a != b && p.leq(b, a)) throw std::invalid_argument("relation is not antisymmetric");
            if ((p.down_[a - 1] & ~d) != 0) throw std::invalid_argument("relation is not transitive");
        }
    }
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return {n, covers};
}

word_t Poset::ideal(word_t mask) const noexcept {
    word_t acc = 0;
    for (word_t rest = mask; rest; rest &= rest - 1) acc |= down_[std::countr_zero(rest)];
    return acc;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a) {
        for (int b = 1; b <= n_; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool covering = true;
            for (int c = 1; c <= n_ && covering; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
            }
            if (covering) out.emplace_back(a, b);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Covering

Covering::Covering(int n, std::vector<word_t> block_masks) : n_(n), blocks_(std::move(block_masks)) {
    check_dimension(n);
    word_t all = 0;
    for (word_t b : blocks_) {
        if (b == 0) throw std::invalid_argument("covering contains an empty block");
        if (b & ~full_mask(n)) throw std::invalid_argument("covering block out of range");
        all |= b;
    }
    std::vector<word_t> sorted = blocks_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("covering contains a duplicate block");
    }
    if (all != full_mask(n)) {
        const int missing = std::countr_zero(~all & full_mask(n)) + 1;
        throw std::invalid_argument("blocks do not cover coordinate " + std::to_string(missing));
    }
}

namespace {

std::vector<word_t> masks_of(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<word_t> out;
    out.reserve(blocks.size());
    for (const auto& block : blocks) {
        word_t m = 0;
        for (int i : block) {
            if (i < 1 || i > n) throw std::invalid_argument("covering block element out of range");
            m |= unit(i);
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace

Covering::Covering(int n, const std::vector<std::vector<int>>& blocks)
    : Covering(n, masks_of(n, blocks)) {}

Covering Covering::singletons(int n) {
    std::vector<word_t> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back(unit(i));
    return {n, std::move(blocks)};
}

std::vector<std::vector<int>> Covering::block_lists() const {
    std::vector<std::vector<int>> out;
    for (word_t b : blocks_) {
        std::vector<int> list;
        for (word_t rest = b; rest; rest &= rest - 1) list.push_back(std::countr_zero(rest) + 1);
        out.push_back(std::move(list));
    }
    return out;
}

// ---------------------------------------------------------------------------
// WeightTable

WeightTable::WeightTable(int n, std::vector<weight_t> values) : n_(n), values_(std::move(values)) {
    check_dimension(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("weight table for n=" + std::to_string(n) + " needs " +
                                    std::to_string(std::size_t{1} << n) + " entries, got " +
                                    std::to_string(values_.size()));
    }
}

weight_t WeightTable::at(const BitVector& v) const {
    if (v.dim() != n_) throw std::invalid_argument("dimension mismatch in weight lookup");
    return values_[v.bits()];
}

weight_t WeightTable::max_value() const noexcept {
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

weight_t poset_weight(const Poset& p, const BitVector& v) {
    if (v.dim() != p.size()) throw std::invalid_argument("dimension mismatch in poset weight");
    return std::popcount(p.ideal(v.bits()));
}

namespace {

// Exact minimum set cover of `uncovered`, branching on its lowest coordinate
// (some chosen block must contain it) and memoizing on the uncovered mask.
class SetCoverSolver {
public:
    explicit SetCoverSolver(const Covering& f) : by_coord_(f.size()) {
        for (word_t b : f.blocks()) {
            for (word_t rest = b; rest; rest &= rest - 1) by_coord_[std::countr_zero(rest)].push_back(b);
        }
    }

    weight_t solve(word_t uncovered) {
        if (uncovered == 0) return 0;
        if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
        weight_t best = kInfinite;
        for (word_t b : by_coord_[std::countr_zero(uncovered)]) {
            const word_t rest = uncovered & ~b;
            if (rest == 0) {
                best = 1;  // cannot do better
                break;
            }
            // A branch needs at least two blocks; skip it once two is reached.
            if (best <= 2) continue;
            best = std::min<weight_t>(best, solve(rest) + 1);
        }
        memo_.emplace(uncovered, best);
        return best;
    }

    static constexpr weight_t kInfinite = 1 << 20;

private:
    std::vector<std::vector<word_t>> by_coord_;
    std::unordered_map<word_t, weight_t> memo_;
};

}  // namespace

weight_t comb_weight(const Covering& f, const BitVector& v) {
    if (v.dim() != f.size()) throw std::invalid_argument("dimension mismatch in combinatorial weight");
    SetCoverSolver solver(f);
    return solver.solve(v.bits());
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::negative: return "negative";
        case ViolationKind::nonzero_at_origin: return "nonzero_at_origin";
        case ViolationKind::zero_off_origin: return "zero_off_origin";
        case ViolationKind::triangle: return "triangle";
        case ViolationKind::support: return "support";
    }
    return "unknown";
}

WeightVerdict validate_weight(const WeightTable& w) {
    WeightVerdict verdict;
    const word_t count = static_cast<word_t>(w.size());

    for (word_t v = 0; v < count && !verdict.weight_violation; ++v) {
        if (w[v] < 0) {
            verdict.weight_violation = Violation{ViolationKind::negative, v, 0};
        } else if (v == 0 && w[v] != 0) {
            verdict.weight_violation = Violation{ViolationKind::nonzero_at_origin, 0, 0};
        } else if (v != 0 && w[v] == 0) {
            verdict.weight_violation = Violation{ViolationKind::zero_off_origin, v, 0};
        }
    }
    for (word_t u = 1; u < count && !verdict.weight_violation; ++u) {
        for (word_t v = u + 1; v < count; ++v) {
            if (static_cast<std::int64_t>(w[u ^ v]) > std::int64_t{w[u]} + w[v]) {
                verdict.weight_violation = Violation{ViolationKind::triangle, u, v};
                break;
            }
        }
    }
    // Immediate submasks suffice; support respect then follows by transitivity.
    for (word_t v = 1; v < count && !verdict.support_violation; ++v) {
        for (word_t rest = v; rest; rest &= rest - 1) {
            const word_t u = v ^ (rest & -rest);
            if (w[u] > w[v]) {
                verdict.support_violation = Violation{ViolationKind::support, u, v};
                break;
            }
        }
    }
    return verdict;
}

namespace {

WeightTable checked(WeightTable table) {
    const WeightVerdict verdict = validate_weight(table);
    if (verdict.weight_violation) {
        throw WeightAxiomError("not a weight: " + describe(*verdict.weight_violation, table.dim()),
                               *verdict.weight_violation);
    }
    return table;
}

}  // namespace

WeightTable table_from(const Poset& p) {
    const std::size_t count = std::size_t{1} << p.size();
    std::vector<weight_t> values(count);
    for (std::size_t v = 0; v < count; ++v) values[v] = std::popcount(p.ideal(static_cast<word_t>(v)));
    return checked({p.size(), std::move(values)});
}

WeightTable table_from(const Covering& f) {
    const int n = f.size();
    std::vector<std::vector<word_t>> by_coord(n);
    for (word_t b : f.blocks()) {
        for (word_t rest = b; rest; rest &= rest - 1) by_coord[std::countr_zero(rest)].push_back(b);
    }
    // Same recurrence as SetCoverSolver, bottom-up: v & ~b < v numerically.
    const std::size_t count = std::size_t{1} << n;
    std::vector<weight_t> values(count, 0);
    for (std::size_t v = 1; v < count; ++v) {
        const word_t vw = static_cast<word_t>(v);
        weight_t best = SetCoverSolver::kInfinite;
        for (word_t b : by_coord[std::countr_zero(vw)]) best = std::min(best, values[vw & ~b]);
        values[v] = best + 1;
    }
    return checked({n, std::move(values)});
}

WeightTable table_from(int n, std::vector<weight_t> values) { return checked({n, std::move(values)}); }

VectorSet ball(const WeightTable& w, const BitVector& center, weight_t r) {
    if (center.dim() != w.dim()) throw std::invalid_argument("dimension mismatch in ball");
    if (r < 0) throw std::invalid_argument("negative radius");
    std::vector<word_t> members;
    const word_t count = static_cast<word_t>(w.size());
    for (word_t y = 0; y < count; ++y) {
        if (w[y ^ center.bits()] <= r) members.push_back(y);
    }
    return {w.dim(), std::move(members)};
}

VectorSet ball(const WeightTable& w, weight_t r) { return ball(w, BitVector::zero(w.dim()), r); }

WeightTable two_level_weight(const VectorSet& d) {
    if (!d.contains(word_t{0})) throw std::invalid_argument("two-level weight needs 0 in the set");
    if (auto bad = downward_closure_violations(d); !bad.empty()) {
        throw std::invalid_argument("set is not downward closed: " + vec_text(d.dim(), bad[0].member) +
                                    " is a member but " + vec_text(d.dim(), bad[0].missing) +
                                    " is not");
    }
    std::vector<weight_t> values(std::size_t{1} << d.dim(), 2);
    values[0] = 0;
    for (word_t v : d) {
        if (v != 0) values[v] = 1;
    }
    return {d.dim(), std::move(values)};
}

TsBallVerdict is_ts_ball(const VectorSet& d) {
    if (d.empty()) throw std::invalid_argument("empty set cannot be a ball");
    if (!d.contains(word_t{0})) {
        throw std::invalid_argument("translate the set so that it contains 0 first");
    }
    if (auto bad = downward_closure_violations(d); !bad.empty()) {
        return TsBallNo{bad[0].member, bad[0].missing};
    }
    return TsBallYes{two_level_weight(d), 1};
}

WeightTable extend_weight(const WeightTable& w, int n) {
    const int s = w.dim();
    if (n < s) throw std::invalid_argument("cannot extend a weight to a smaller dimension");
    check_dimension(n);
    const weight_t outside = w.max_value() + 1;
    std::vector<weight_t> values(std::size_t{1} << n, outside);
    std::copy(w.values().begin(), w.values().end(), values.begin());
    return {n, std::move(values)};
}

WeightTable max_weight(const WeightTable& w1, const WeightTable& w2, weight_t scale1, weight_t scale2) {
    if (scale1 <= 0 || scale2 <= 0) throw std::invalid_argument("scales must be positive");
    const int n = w1.dim() + w2.dim();
    check_dimension(n);
    std::vector<weight_t> values(std::size_t{1} << n);
    const word_t low = full_mask(w1.dim());
    for (std::size_t x = 0; x < values.size(); ++x) {
        const word_t x1 = static_cast<word_t>(x) & low;
        const word_t x2 = static_cast<word_t>(x) >> w1.dim();
        values[x] = std::max(scale1 * w1[x1], scale2 * w2[x2]);
    }
    return {n, std::move(values)};
}

SSumResult s_sum_literal(const WeightTable& w1, weight_t r, const WeightTable& w2, weight_t s) {
    if (r > s) throw std::invalid_argument("s-sum requires r <= s");
    if (r < 0) throw std::invalid_argument("negative radius");
    const int n = w1.dim() + w2.dim();
    check_dimension(n);
    std::vector<weight_t> values(std::size_t{1} << n);
    const word_t low = full_mask(w1.dim());
    for (std::size_t x = 0; x < values.size(); ++x) {
        const word_t x1 = static_cast<word_t>(x) & low;
        const word_t x2 = static_cast<word_t>(x) >> w1.dim();
        const bool inside = w1[x1] <= r && w2[x2] <= s;
        values[x] = inside ? w1[x1] + w2[x2] : r + s + 1;
    }
    WeightTable table(n, std::move(values));
    WeightVerdict verdict = validate_weight(table);
    return {std::move(table), verdict};
}

EquivalenceResult decoding_equivalent(const WeightTable& w1, const WeightTable& w2) {
    require_same_dim(w1, w2);
    const word_t count = static_cast<word_t>(w1.size());

    // Equivalent iff w2 is a strictly increasing function of w1.
    std::vector<word_t> order(count);
    for (word_t v = 0; v < count; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](word_t a, word_t b) {
        return w1[a] != w1[b] ? w1[a] < w1[b] : w2[a] < w2[b];
    });
    bool equivalent = true;
    for (word_t k = 1; k < count && equivalent; ++k) {
        const word_t a = order[k - 1], b = order[k];
        equivalent = (w1[a] < w1[b]) == (w2[a] < w2[b]);
    }
    if (equivalent) return {};

    auto sign = [](weight_t a, weight_t b) { return (a > b) - (a < b); };
    auto oriented = [&](word_t a, word_t b) {
        if (w1[a] > w1[b] || (w1[a] == w1[b] && w2[a] > w2[b])) std::swap(a, b);
        return std::pair{a, b};
    };
    // Prefer a strictly reversed pair, fall back to a tie against a strict order.
    for (word_t u = 0; u < count; ++u) {
        for (word_t v = u + 1; v < count; ++v) {
            if (sign(w1[u], w1[v]) * sign(w2[u], w2[v]) < 0) return {false, oriented(u, v)};
        }
    }
    for (word_t u = 0; u < count; ++u) {
        for (word_t v = u + 1; v < count; ++v) {
            if (sign(w1[u], w1[v]) != sign(w2[u], w2[v])) return {false, oriented(u, v)};
        }
    }
    return {false, std::nullopt};
}

WeightTable metrize_by_rank(const WeightTable& values) {
    if (values.size() == 0) throw std::invalid_argument("empty table");
    if (values[0] != 0) throw std::invalid_argument("metrization needs value 0 at the zero vector");
    std::vector<weight_t> distinct;
    for (std::size_t v = 1; v < values.size(); ++v) {
        if (values[static_cast<word_t>(v)] <= 0) {
            throw std::invalid_argument("metrization needs positive values off the zero vector, failing at " +
                                        vec_text(values.dim(), static_cast<word_t>(v)));
        }
        distinct.push_back(values[static_cast<word_t>(v)]);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto k = static_cast<weight_t>(distinct.size());

    std::vector<weight_t> out(values.size(), 0);
    for (std::size_t v = 1; v < values.size(); ++v) {
        const auto pos = std::lower_bound(distinct.begin(), distinct.end(), values[static_cast<word_t>(v)]) -
                         distinct.begin();
        out[v] = k + static_cast<weight_t>(pos);  // rank pos+1 maps to k + rank - 1
    }
    return {values.dim(), std::move(out)};
}

// ---------------------------------------------------------------------------
// Matrix conditions

MetricMatrix::MetricMatrix(int n, std::vector<weight_t> entries) : n_(n), m_(std::move(entries)) {
    check_dimension(n);
    if (n > kMaxMatrixDimension) {
        throw std::invalid_argument("distance matrix limited to n <= " + std::to_string(kMaxMatrixDimension));
    }
    if (m_.size() != order() * order()) throw std::invalid_argument("distance matrix has wrong size");
}

WeightTable MetricMatrix::first_column() const {
    std::vector<weight_t> col(order());
    for (std::size_t x = 0; x < order(); ++x) col[x] = (*this)(static_cast<word_t>(x), 0);
    return {n_, std::move(col)};
}

MetricMatrix matrix_from_weight(const WeightTable& w) {
    if (w.dim() > kMaxMatrixDimension) {
        throw std::invalid_argument("distance matrix limited to n <= " + std::to_string(kMaxMatrixDimension));
    }
    const std::size_t order = w.size();
    std::vector<weight_t> entries(order * order);
    for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = 0; y < order; ++y) entries[x * order + y] = w[static_cast<word_t>(x ^ y)];
    }
    return {w.dim(), std::move(entries)};
}

MatrixVerdict validate_c1c2c3(const MetricMatrix& m, const VectorSet& d, weight_t r, const WeightTable& d_ref) {
    if (d.dim() != m.dim() || d_ref.dim() != m.dim()) {
        throw std::invalid_argument("dimension mismatch in matrix validation");
    }
    if (!d.contains(word_t{0})) throw std::invalid_argument("matrix conditions need 0 in D");
    const word_t order = static_cast<word_t>(m.order());
    for (word_t x : d) {
        if (m(x, 0) != d_ref[x]) return {MatrixCondition::c1, x, 0};
    }
    for (word_t x = 0; x < order; ++x) {
        if (!d.contains(x) && m(x, 0) <= r) return {MatrixCondition::c2, x, 0};
    }
    for (word_t x = 0; x < order; ++x) {
        for (word_t y = 0; y < order; ++y) {
            if (m(x, y) != m(x ^ y, 0)) return {MatrixCondition::c3, x, y};
        }
    }
    return {};
}

}  // namespace tsperfect
