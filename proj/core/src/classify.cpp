#include "tsperfect/classify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>

#include "tsperfect/tilings.hpp"

namespace tsperfect {

std::string to_string(RealizationKind kind) {
    return kind == RealizationKind::poset ? "poset" : "combinatorial";
}

WeightTable Realization::table() const {
    return std::visit([](const auto& m) { return table_from(m); }, metric);
}

namespace {

word_t vec(std::initializer_list<int> coords) {
    word_t w = 0;
    for (int i : coords) w |= unit(i);
    return w;
}

// Radii r in [1, max weight] with {v : w[v] <= r} == D, as a closed range.
// Empty when hi < lo.
std::pair<weight_t, weight_t> realizing_radii(const VectorSet& d, const std::vector<weight_t>& w) {
    weight_t inside = 0;
    for (word_t v : d) inside = std::max(inside, w[v]);
    weight_t outside = std::numeric_limits<weight_t>::max();
    weight_t top = 0;
    for (std::size_t v = 0; v < w.size(); ++v) {
        top = std::max(top, w[v]);
        if (!d.contains(static_cast<word_t>(v))) outside = std::min(outside, w[v]);
    }
    const weight_t lo = std::max<weight_t>(inside, 1);
    const weight_t hi = outside == std::numeric_limits<weight_t>::max() ? top : std::min(outside - 1, top);
    return {lo, hi};
}

// Calls visit(down_sets) for every labeled poset on [n]. Each poset on [k+1]
// restricts to a unique poset on [k]; the new element k+1 is attached below a
// filter U and above an ideal D with every element of D below every element
// of U.
void for_each_poset(int n, const std::function<void(const std::vector<word_t>&)>& visit) {
    std::vector<word_t> down;
    std::function<void(int)> grow = [&](int k) {
        if (k == n) {
            visit(down);
            return;
        }
        std::vector<word_t> up(k, 0);
        for (int b = 0; b < k; ++b) {
            for (word_t rest = down[b]; rest; rest &= rest - 1) up[std::countr_zero(rest)] |= word_t{1} << b;
        }
        const word_t all = full_mask(k);
        for (word_t ideal = 0; ideal <= all; ++ideal) {
            bool is_ideal = true;
            for (word_t rest = ideal; rest && is_ideal; rest &= rest - 1) {
                is_ideal = (down[std::countr_zero(rest)] & ~ideal) == 0;
            }
            if (!is_ideal) continue;
            for (word_t filter = 0; filter <= all; ++filter) {
                bool ok = (filter & ideal) == 0;
                for (word_t rest = filter; rest && ok; rest &= rest - 1) {
                    const int u = std::countr_zero(rest);
                    ok = (up[u] & ~filter) == 0 && (ideal & ~down[u]) == 0;
                }
                if (!ok) continue;
                const word_t self = word_t{1} << k;
                down.push_back(ideal | self);
                for (word_t rest = filter; rest; rest &= rest - 1) down[std::countr_zero(rest)] |= ideal | self;
                grow(k + 1);
                for (word_t rest = filter; rest; rest &= rest - 1) {
                    down[std::countr_zero(rest)] &= ~self;
                    // ideal bits were already present: every d in D is below u
                }
                down.pop_back();
            }
        }
    };
    grow(0);
}

std::vector<weight_t> covering_values(int n, const std::vector<word_t>& blocks) {
    std::vector<std::vector<word_t>> by_coord(n);
    for (word_t b : blocks) {
        for (word_t rest = b; rest; rest &= rest - 1) by_coord[std::countr_zero(rest)].push_back(b);
    }
    std::vector<weight_t> values(std::size_t{1} << n, 0);
    for (std::size_t v = 1; v < values.size(); ++v) {
        const word_t vw = static_cast<word_t>(v);
        weight_t best = std::numeric_limits<weight_t>::max() - 1;
        for (word_t b : by_coord[std::countr_zero(vw)]) best = std::min(best, values[vw & ~b]);
        values[v] = best + 1;
    }
    return values;
}

void check_realization(const Realization& r, const VectorSet& tile, const std::string& what) {
    if (ball(r.table(), r.radius) != tile) {
        throw std::logic_error("reference realization " + what + " does not produce its tile as a ball");
    }
}

}  // namespace

std::vector<VectorSet> enumerate_downward_closed(int size, int max_rank) {
    if (size != 2 && size != 4 && size != 8) throw std::invalid_argument("tile size must be 2, 4 or 8");
    if (max_rank < 1 || max_rank > 7) throw std::invalid_argument("max_rank must lie in [1, 7]");

    std::vector<VectorSet> out;
    for (int s = 1; s <= max_rank; ++s) {
        const int extras = size - 1 - s;
        if (extras < 0) break;
        std::vector<word_t> members{0};
        for (int i = 1; i <= s; ++i) members.push_back(unit(i));
        const word_t top = full_mask(s);

        // Faces are added in increasing integer order; every proper submask of
        // a candidate is numerically smaller, hence already decided.
        std::function<void(word_t, int)> extend = [&](word_t after, int left) {
            if (left == 0) {
                out.push_back(canonical_form(VectorSet(s, members)));
                return;
            }
            for (word_t x = after + 1; x <= top; ++x) {
                if (std::popcount(x) < 2) continue;
                bool closed = true;
                for (word_t rest = x; rest && closed; rest &= rest - 1) {
                    closed = std::find(members.begin(), members.end(), x ^ (rest & -rest)) != members.end();
                }
                if (!closed) continue;
                members.push_back(x);
                extend(x, left - 1);
                members.pop_back();
            }
        };
        extend(0, extras);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClassificationRecord classify_tile(const VectorSet& tile) {
    if (!tile.contains(word_t{0})) throw std::invalid_argument("tile must contain 0");
    ClassificationRecord rec;
    rec.size = static_cast<int>(tile.size());
    rec.rank = rank(tile);

    // When the tile spans exactly the coordinates it uses, dropping unused
    // coordinates is a coordinate projection and keeps the support structure.
    word_t used = 0;
    for (word_t w : tile) used |= w;
    VectorSet local = tile;
    if (rec.rank == 0) {
        local = VectorSet(1, {0});
    } else if (std::popcount(used) == rec.rank) {
        Permutation compress;
        compress.image.resize(tile.dim());
        int next_used = 1, next_free = rec.rank + 1;
        for (int i = 1; i <= tile.dim(); ++i) {
            compress.image[i - 1] = (used & unit(i)) ? next_used++ : next_free++;
        }
        std::vector<word_t> words;
        for (word_t w : tile) words.push_back(compress.apply(w));
        local = VectorSet(rec.rank, std::move(words));
    }
    rec.tile = local.dim() <= kMaxCanonicalDimension ? canonical_form(local) : local;
    rec.ts = is_ts_ball(rec.tile);

    const VectorSet reduced = rec.rank == 0 ? VectorSet(1, {0}) : reduce_to_span(rec.tile).reduced;
    rec.is_tile = complete_tiling(reduced.dim(), reduced).code.has_value();
    return rec;
}

std::vector<ClassificationRecord> classify_small_tiles(int size, const ClassifyOptions& options) {
    const auto candidates = enumerate_downward_closed(size, std::min(size - 1, 7));
    std::vector<ClassificationRecord> records;
    records.reserve(candidates.size());

    std::vector<std::pair<VectorSet, Realization>> references;
    if (size == 8) {
        for (const auto& ref : reference_tiles()) {
            const CanonicalForm canon = canonicalize(ref.tile);
            references.emplace_back(canon.form, permute(ref.witness, canon.perm));
        }
    } else {
        const std::pair<SmallBall, int> balls[] = {{SmallBall::b1, 1}, {SmallBall::b2, 3}, {SmallBall::b3, 2}};
        for (auto [kind, dim] : balls) {
            const CanonicalForm canon = canonicalize(small_ball(kind, dim));
            references.emplace_back(canon.form, permute(small_ball_poset(kind, dim), canon.perm));
        }
    }

    for (const VectorSet& tile : candidates) {
        ClassificationRecord rec = classify_tile(tile);
        for (const auto& [form, realization] : references) {
            if (form != rec.tile) continue;
            check_realization(realization, rec.tile, realization.label);
            rec.realizations.push_back(realization);
        }
        if (rec.is_ts_ball() && options.realize_posets &&
            (rec.tile.dim() <= 6 || options.allow_rank7_posets)) {
            auto found = realize_poset(rec.tile, options.allow_rank7_posets);
            rec.realizations.insert(rec.realizations.end(), found.begin(), found.end());
        }
        if (rec.is_ts_ball() && options.realize_coverings) {
            const int blocks = options.max_blocks > 0 ? options.max_blocks : rec.rank;
            auto found = realize_combinatorial(rec.tile, blocks, options.max_block_size);
            rec.realizations.insert(rec.realizations.end(), found.begin(), found.end());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("poset enumeration supports 1 <= n <= 7");
    std::vector<Poset> out;
    for_each_poset(n, [&](const std::vector<word_t>& down) { out.push_back(Poset::from_down_sets(n, down)); });
    return out;
}

std::vector<Realization> realize_poset(const VectorSet& d, bool allow_rank7) {
    const int n = d.dim();
    if (n > 7 || (n == 7 && !allow_rank7)) {
        throw std::invalid_argument("poset search over rank " + std::to_string(n) +
                                    " needs the rank-7 opt-in (and is impossible above 7)");
    }
    if (!d.contains(word_t{0})) throw std::invalid_argument("tile must contain 0");

    const std::size_t points = std::size_t{1} << n;
    std::vector<word_t> outside;
    for (std::size_t v = 0; v < points; ++v) {
        if (!d.contains(static_cast<word_t>(v))) outside.push_back(static_cast<word_t>(v));
    }

    std::vector<Realization> out;
    for_each_poset(n, [&](const std::vector<word_t>& down) {
        auto weight = [&](word_t v) {
            word_t acc = 0;
            for (word_t rest = v; rest; rest &= rest - 1) acc |= down[std::countr_zero(rest)];
            return static_cast<weight_t>(std::popcount(acc));
        };
        weight_t inside = 1;
        for (word_t v : d) inside = std::max(inside, weight(v));
        weight_t min_out = static_cast<weight_t>(n) + 1;
        for (word_t v : outside) {
            min_out = std::min(min_out, weight(v));
            if (min_out <= inside) return;
        }
        // The full vector has weight n, the maximum.
        const weight_t hi = std::min<weight_t>(min_out - 1, n);
        for (weight_t r = inside; r <= hi; ++r) {
            out.push_back({Poset::from_down_sets(n, down), r, "search"});
        }
    });
    return out;
}

std::vector<Realization> realize_combinatorial(const VectorSet& d, int max_blocks, int max_block_size) {
    const int n = d.dim();
    if (max_blocks < 1 || max_block_size < 1) throw std::invalid_argument("covering bounds must be positive");
    if (!d.contains(word_t{0})) throw std::invalid_argument("tile must contain 0");

    std::vector<word_t> candidates;
    for (word_t b = 1; b <= full_mask(n); ++b) {
        if (std::popcount(b) <= max_block_size) candidates.push_back(b);
    }
    // Search size: sum of binomial(|candidates|, k) for k <= max_blocks.
    constexpr double kLimit = 5e6;
    double total = 0, term = 1;
    const int m = static_cast<int>(candidates.size());
    for (int k = 1; k <= std::min(max_blocks, m); ++k) {
        term = term * (m - k + 1) / k;
        total += term;
    }
    if (total > kLimit) {
        throw std::invalid_argument("covering search space of " + std::to_string(static_cast<long long>(total)) +
                                    " block subsets exceeds the limit");
    }

    std::vector<Realization> out;
    std::vector<word_t> chosen;
    std::function<void(std::size_t, word_t)> pick = [&](std::size_t from, word_t uni) {
        if (!chosen.empty() && uni == full_mask(n)) {
            const auto values = covering_values(n, chosen);
            const auto [lo, hi] = realizing_radii(d, values);
            for (weight_t r = lo; r <= hi; ++r) out.push_back({Covering(n, chosen), r, "search"});
        }
        if (static_cast<int>(chosen.size()) == max_blocks) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            pick(i + 1, uni | candidates[i]);
            chosen.pop_back();
        }
    };
    pick(0, 0);
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<ReferenceTile>& reference_tiles() {
    static const std::vector<ReferenceTile> tiles = [] {
        std::vector<ReferenceTile> t;
        t.push_back({"D1^3", VectorSet::whole_space(3), {Poset::chain(3), 3, "D1^3 chain 1<=2<=3"}});
        t.push_back({"D1^7",
                     VectorSet(7, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({5}), vec({6}), vec({7})}),
                     {Poset::antichain(7), 1, "D1^7 antichain"}});
        t.push_back({"D1^4",
                     VectorSet(4, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({1, 2}), vec({1, 3}), vec({1, 4})}),
                     {Covering(4, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}}), 1, "D1^4 F1"}});
        t.push_back({"D2^4",
                     VectorSet(4, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({1, 2}), vec({1, 3}), vec({2, 3})}),
                     {Covering(4, std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {4}}), 1, "D2^4 F2"}});
        t.push_back({"D1^5",
                     VectorSet(5, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({5}), vec({1, 4}), vec({1, 5})}),
                     {Covering(5, std::vector<std::vector<int>>{{1, 4}, {1, 5}, {2}, {3}}), 1, "D1^5 F3"}});
        t.push_back({"D1^6",
                     VectorSet(6, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({5}), vec({6}), vec({1, 2})}),
                     {Covering(6, std::vector<std::vector<int>>{{1, 2}, {3}, {4}, {5}, {6}}), 1, "D1^6 F4"}});
        return t;
    }();
    return tiles;
}

VectorSet rejected_example() {
    return VectorSet(4, {0, vec({1}), vec({2}), vec({3}), vec({4}), vec({1, 3}), vec({1, 4}), vec({1, 3, 4})});
}

VectorSet small_ball(SmallBall kind, int n) {
    switch (kind) {
        case SmallBall::b1:
            return VectorSet(n, {0, vec({1})});
        case SmallBall::b2:
            if (n < 3) throw std::invalid_argument("B2 needs n >= 3");
            return VectorSet(n, {0, vec({1}), vec({2}), vec({3})});
        case SmallBall::b3:
            if (n < 2) throw std::invalid_argument("B3 needs n >= 2");
            return VectorSet(n, {0, vec({1}), vec({2}), vec({1, 2})});
    }
    throw std::invalid_argument("unknown small ball");
}

Realization small_ball_poset(SmallBall kind, int n) {
    const int low = kind == SmallBall::b1 ? 1 : kind == SmallBall::b2 ? 3 : 2;
    if (n < low) throw std::invalid_argument("dimension too small for this ball");
    std::vector<std::pair<int, int>> relations;
    for (int t = 1; t <= low; ++t) {
        for (int l = low + 1; l <= n; ++l) relations.emplace_back(t, l);
    }
    const weight_t radius = kind == SmallBall::b3 ? 2 : 1;
    const char* name = kind == SmallBall::b1 ? "B1" : kind == SmallBall::b2 ? "B2" : "B3";
    return {Poset(n, relations), radius, std::string(name) + " poset"};
}

Realization permute(const Realization& r, const Permutation& perm) {
    Realization out = r;
    if (const auto* p = std::get_if<Poset>(&r.metric)) {
        std::vector<word_t> down(p->size());
        for (int b = 1; b <= p->size(); ++b) down[perm.image[b - 1] - 1] = perm.apply(p->down_set(b));
        out.metric = Poset::from_down_sets(p->size(), std::move(down));
    } else {
        const auto& f = std::get<Covering>(r.metric);
        std::vector<word_t> blocks;
        for (word_t b : f.blocks()) blocks.push_back(perm.apply(b));
        out.metric = Covering(f.size(), std::move(blocks));
    }
    return out;
}

}  // namespace tsperfect
