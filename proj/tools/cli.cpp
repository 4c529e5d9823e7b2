#include "cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <string>

#include "tsperfect/classify.hpp"
#include "tsperfect/io.hpp"
#include "tsperfect/metrics.hpp"
#include "tsperfect/tilings.hpp"

namespace tsperfect::cli {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Options of every subcommand live here; CLI11 binds to these members.
struct Args {
    std::string poset, covering, table, vector, center, set, tiling, tile, code;
    std::string weight_file, left, right, a, b, x, realize;
    int radius = 0, n = 0, s = 0, size = 0, hamming = 0;
    int max_blocks = 0, max_block_size = 2;
    std::vector<int> scales;
    bool check_tile = false, ts_witness = false, rank7 = false, as_table = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

WeightTable load_metric(const Args& args) {
    if (!args.poset.empty()) return table_from(io::poset_from_json(io::read_json(args.poset)));
    if (!args.covering.empty()) return table_from(io::covering_from_json(io::read_json(args.covering)));
    return io::weight_table_from_json(io::read_json(args.table));
}

void require_one_metric(const Args& args) {
    const int given = !args.poset.empty() + !args.covering.empty() + !args.table.empty();
    if (given != 1) throw CLI::ValidationError("exactly one of --poset, --covering, --table is required");
}

// A code file may be a set document or a tiling document.
VectorSet load_code(const std::string& path) {
    const json j = io::read_json(path);
    if (j.is_object() && j.contains("code") && !j.contains("vectors")) return io::tiling_from_json(j).code;
    return io::vector_set_from_json(j);
}

int cmd_weight(const Args& args, std::ostream& out) {
    require_one_metric(args);
    const WeightTable w = load_metric(args);
    out << w.at(io::parse_vector(args.vector, w.dim())) << "\n";
    return kOk;
}

int cmd_ball(const Args& args, std::ostream& out) {
    require_one_metric(args);
    if (args.radius < 0) throw CLI::ValidationError("--radius must be non-negative");
    const WeightTable w = load_metric(args);
    emit(out, io::to_json(ball(w, io::parse_vector(args.center, w.dim()), args.radius)));
    return kOk;
}

int cmd_validate_weight(const Args& args, std::ostream& out) {
    const WeightTable w = io::weight_table_from_json(io::read_json(args.table));
    const WeightVerdict verdict = validate_weight(w);
    emit(out, io::to_json(verdict, w.dim()));
    return verdict.is_weight() ? kOk : kNegative;
}

int cmd_is_ts_ball(const Args& args, std::ostream& out) {
    const VectorSet d = io::vector_set_from_json(io::read_json(args.set));
    if (d.empty()) throw io::FormatError("the set is empty");
    if (!d.contains(word_t{0})) throw io::FormatError("the set must contain the zero vector; translate it first");
    const TsBallVerdict verdict = is_ts_ball(d);
    emit(out, io::to_json(verdict, d.dim()));
    return std::holds_alternative<TsBallYes>(verdict) ? kOk : kNegative;
}

int cmd_verify_tiling(const Args& args, std::ostream& out) {
    const Tiling t = io::tiling_from_json(io::read_json(args.tiling));
    const TilingVerdict verdict = verify_tiling(t);
    emit(out, io::to_json(verdict, t.n));
    return verdict.valid() ? kOk : kNegative;
}

int cmd_complete_tiling(const Args& args, std::ostream& out) {
    const VectorSet d = io::vector_set_from_json(io::read_json(args.tile));
    if (args.n < d.dim()) throw CLI::ValidationError("--n is smaller than the tile dimension");
    if (!d.contains(word_t{0})) throw io::FormatError("the tile must contain the zero vector");
    const Completion c = complete_tiling(args.n, d);
    if (!c.code) {
        emit(out, json{{"tileable", false}, {"reason", c.reason}});
        return kNegative;
    }
    emit(out, io::to_json(Tiling{args.n, embed(d, args.n), *c.code}));
    return kOk;
}

int cmd_perfect_check(const Args& args, std::ostream& out) {
    if (args.radius <= 0) throw CLI::ValidationError("--radius must be positive");
    const VectorSet code = load_code(args.code);
    const WeightTable w = io::weight_table_from_json(io::read_json(args.table));
    if (code.dim() != w.dim()) throw io::FormatError("code and weight table dimensions differ");
    const TilingVerdict verdict = verify_perfect(code, w, args.radius);
    json j = io::to_json(verdict, w.dim());
    j["perfect"] = verdict.valid();
    emit(out, j);
    return verdict.valid() ? kOk : kNegative;
}

int cmd_dn_family(const Args& args, std::ostream& out) {
    check_dimension(args.n);
    BitVector x;
    if (!args.x.empty() == (args.hamming != 0)) throw CLI::ValidationError("give exactly one of --x, --weight");
    if (!args.x.empty()) {
        x = io::parse_vector(args.x, args.n);
    } else {
        if (args.hamming < 2 || args.hamming > args.n) throw CLI::ValidationError("--weight must lie in [2, n]");
        x = BitVector(args.n, full_mask(args.hamming));
    }
    if (hamming_weight(x) < 2) throw CLI::ValidationError("x must have Hamming weight at least 2");

    const VectorSet d = dn_tile(args.n, x);
    const bool tile = dn_is_tile(args.n, x);
    json j{{"n", args.n}, {"x", x.to_string()}, {"tile", io::vectors_json(d)}, {"is_tile", tile}};
    int status = kOk;
    if (args.check_tile) {
        const bool searched = complete_tiling(args.n, d).code.has_value();
        j["exact_cover"] = searched;
        if (!tile) {
            j["reason"] = "not a tile: wt(x) = " + std::to_string(hamming_weight(x)) + " is n-1 or n-2";
            status = kNegative;
        }
    }
    if (args.ts_witness) {
        const DnTsVerdict ts = dn_ts_perfect(args.n, x);
        if (const auto* yes = std::get_if<DnTsYes>(&ts)) {
            j["ts_perfect"] = true;
            j["covering"] = io::to_json(yes->covering);
        } else {
            const auto& no = std::get<DnTsNo>(ts);
            j["ts_perfect"] = false;
            j["ts_reason"] = no.reason;
            if (no.missing_submask) j["missing_submask"] = io::vector_json(args.n, *no.missing_submask);
            status = kNegative;
        }
    }
    emit(out, j);
    return status;
}

int cmd_extend(const Args& args, std::ostream& out) {
    const bool by_weight = !args.weight_file.empty();
    if (by_weight == !args.tiling.empty()) throw CLI::ValidationError("give exactly one of --weight, --tiling");
    if (by_weight) {
        const WeightTable w = io::weight_table_from_json(io::read_json(args.weight_file));
        if (args.s != 0 && args.s != w.dim()) throw io::FormatError("--s does not match the table dimension");
        if (args.n < w.dim()) throw CLI::ValidationError("--n is smaller than s");
        emit(out, io::to_json(extend_weight(w, args.n)));
    } else {
        const Tiling t = io::tiling_from_json(io::read_json(args.tiling));
        if (args.n < t.n) throw CLI::ValidationError("--n is smaller than the tiling dimension");
        emit(out, io::to_json(extend_tiling(t, args.n)));
    }
    return kOk;
}

int cmd_concat(const Args& args, std::ostream& out) {
    const json l = io::read_json(args.left);
    const json r = io::read_json(args.right);
    const bool weights = l.is_object() && l.contains("weights");
    if (weights != (r.is_object() && r.contains("weights"))) {
        throw io::FormatError("--left and --right must both be tilings or both be weight tables");
    }
    if (weights) {
        weight_t s1 = 1, s2 = 1;
        if (!args.scales.empty()) {
            if (args.scales.size() != 2 || args.scales[0] < 1 || args.scales[1] < 1) {
                throw CLI::ValidationError("--scales takes two positive integers");
            }
            s1 = args.scales[0];
            s2 = args.scales[1];
        }
        emit(out, io::to_json(max_weight(io::weight_table_from_json(l), io::weight_table_from_json(r), s1, s2)));
        return kOk;
    }
    if (!args.scales.empty()) throw CLI::ValidationError("--scales applies to weight tables only");
    const Tiling lt = io::tiling_from_json(l), rt = io::tiling_from_json(r);
    if (lt.n + rt.n > kMaxDimension) throw io::FormatError("concatenated dimension too large");
    for (const Tiling* t : {&lt, &rt}) {
        const TilingVerdict v = verify_tiling(*t);
        if (!v.valid()) {
            json j = io::to_json(v, t->n);
            j["operand"] = t == &lt ? "left" : "right";
            emit(out, j);
            return kNegative;
        }
    }
    emit(out, io::to_json(concat_tiling(lt, rt)));
    return kOk;
}

int cmd_equiv(const Args& args, std::ostream& out) {
    const WeightTable a = io::weight_table_from_json(io::read_json(args.a));
    const WeightTable b = io::weight_table_from_json(io::read_json(args.b));
    if (a.dim() != b.dim()) throw io::FormatError("tables have different dimensions");
    const EquivalenceResult r = decoding_equivalent(a, b);
    json j{{"equivalent", r.equivalent}};
    if (r.witness) {
        const auto [u, v] = *r.witness;
        j["witness"] = {{"u", io::vector_json(a.dim(), u)},
                        {"v", io::vector_json(a.dim(), v)},
                        {"a", {a[u], a[v]}},
                        {"b", {b[u], b[v]}}};
    }
    emit(out, j);
    return r.equivalent ? kOk : kNegative;
}

int cmd_metrize(const Args& args, std::ostream& out) {
    emit(out, io::to_json(metrize_by_rank(io::weight_table_from_json(io::read_json(args.table)))));
    return kOk;
}

int cmd_classify(const Args& args, std::ostream& out) {
    ClassifyOptions options;
    options.realize_posets = args.realize == "poset";
    options.realize_coverings = args.realize == "combinatorial";
    options.allow_rank7_posets = args.rank7;
    options.max_blocks = args.max_blocks;
    options.max_block_size = args.max_block_size;
    const auto records = classify_small_tiles(args.size, options);
    if (args.as_table) {
        out << io::render_table(records);
    } else {
        emit(out, io::to_json(records));
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Args args;
    CLI::App app{"Translation-invariant support-respecting metrics, tilings and perfect codes on F_2^n",
                 "tsperfect"};
    app.require_subcommand(1);

    auto metric_options = [&](CLI::App* sub) {
        sub->add_option("--poset", args.poset, "poset JSON file");
        sub->add_option("--covering", args.covering, "covering JSON file");
        sub->add_option("--table", args.table, "weight table JSON file");
    };

    auto* weight = app.add_subcommand("weight", "evaluate a weight at a vector");
    metric_options(weight);
    weight->add_option("--vector", args.vector, "vector as a 0/1 string")->required();

    auto* ball_cmd = app.add_subcommand("ball", "ball around a center");
    metric_options(ball_cmd);
    ball_cmd->add_option("--center", args.center)->required();
    ball_cmd->add_option("--radius", args.radius)->required();

    auto* validate = app.add_subcommand("validate-weight", "check the weight axioms and support respect");
    validate->add_option("--table", args.table)->required();

    auto* ts_ball = app.add_subcommand("is-ts-ball", "decide whether a set is a ball of some TS-metric");
    ts_ball->add_option("--set", args.set)->required();

    auto* verify = app.add_subcommand("verify-tiling", "check that translates of D by C partition the space");
    verify->add_option("--tiling", args.tiling)->required();

    auto* complete = app.add_subcommand("complete-tiling", "find the least code tiling F_2^n with D");
    complete->add_option("--tile", args.tile)->required();
    complete->add_option("--n", args.n)->required();

    auto* perfect = app.add_subcommand("perfect-check", "check that a code is perfect for a weight and radius");
    perfect->add_option("--code", args.code)->required();
    perfect->add_option("--table", args.table)->required();
    perfect->add_option("--radius", args.radius)->required();

    auto* dn = app.add_subcommand("dn-family", "the tiles {0, e_1, ..., e_n, x}");
    dn->add_option("--n", args.n)->required();
    dn->add_option("--x", args.x);
    dn->add_option("--weight", args.hamming, "use x = e_1 + ... + e_W");
    dn->add_flag("--check-tile", args.check_tile);
    dn->add_flag("--ts-witness", args.ts_witness);

    auto* extend = app.add_subcommand("extend", "extend a weight table or a tiling to F_2^n");
    extend->add_option("--weight", args.weight_file, "weight table JSON file");
    extend->add_option("--s", args.s);
    extend->add_option("--tiling", args.tiling);
    extend->add_option("--n", args.n)->required();

    auto* concat_cmd = app.add_subcommand("concat", "concatenate two tilings, or two weights by scaled max");
    concat_cmd->add_option("--left", args.left)->required();
    concat_cmd->add_option("--right", args.right)->required();
    concat_cmd->add_option("--scales", args.scales)->expected(2);

    auto* equiv = app.add_subcommand("equiv", "decoding equivalence of two weight tables");
    equiv->add_option("--a", args.a)->required();
    equiv->add_option("--b", args.b)->required();

    auto* metrize = app.add_subcommand("metrize", "replace values by their ranks, shifted into a metric");
    metrize->add_option("--table", args.table)->required();

    auto* classify = app.add_subcommand("classify", "classify downward-closed tiles of a given size");
    classify->add_option("--size", args.size)->required()->check(CLI::IsMember({2, 4, 8}));
    classify->add_option("--realize", args.realize)->check(CLI::IsMember({"poset", "combinatorial"}));
    classify->add_flag("--opt-in-rank7", args.rank7);
    classify->add_flag("--table", args.as_table, "human-readable table instead of JSON");
    classify->add_option("--max-blocks", args.max_blocks, "covering search: blocks (default: rank)");
    classify->add_option("--max-block-size", args.max_block_size, "covering search: block size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*weight) return cmd_weight(args, out);
        if (*ball_cmd) return cmd_ball(args, out);
        if (*validate) return cmd_validate_weight(args, out);
        if (*ts_ball) return cmd_is_ts_ball(args, out);
        if (*verify) return cmd_verify_tiling(args, out);
        if (*complete) return cmd_complete_tiling(args, out);
        if (*perfect) return cmd_perfect_check(args, out);
        if (*dn) return cmd_dn_family(args, out);
        if (*extend) return cmd_extend(args, out);
        if (*concat_cmd) return cmd_concat(args, out);
        if (*equiv) return cmd_equiv(args, out);
        if (*metrize) return cmd_metrize(args, out);
        if (*classify) return cmd_classify(args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace tsperfect::cli
