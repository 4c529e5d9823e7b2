#include "tsperfect/io.hpp"

#include <fstream>
#include <sstream>

namespace tsperfect::io {

namespace {

int read_dimension(const json& j) {
    if (!j.is_object()) throw FormatError("expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw FormatError("missing integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxDimension) throw FormatError("\"n\" out of range: " + std::to_string(n));
    return n;
}

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
    return j[name];
}

VectorSet read_vectors(const json& arr, int n, const char* name) {
    if (!arr.is_array()) throw FormatError(std::string("\"") + name + "\" must be an array");
    std::vector<word_t> words;
    for (const auto& item : arr) {
        if (!item.is_string()) throw FormatError(std::string("\"") + name + "\" entries must be strings");
        words.push_back(parse_vector(item.get<std::string>(), n).bits());
    }
    const std::size_t count = words.size();
    VectorSet s(n, std::move(words));
    if (s.size() != count) throw FormatError(std::string("duplicate vectors in \"") + name + "\"");
    return s;
}

std::vector<int> read_int_list(const json& arr, const char* what) {
    if (!arr.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& item : arr) {
        if (!item.is_number_integer()) throw FormatError(std::string(what) + " entries must be integers");
        out.push_back(item.get<int>());
    }
    return out;
}

std::string e_list(const VectorSet& s) {
    std::string out = "{";
    bool first = true;
    for (word_t w : s) {
        if (!first) out += ", ";
        first = false;
        out += to_e_notation(w);
    }
    return out + "}";
}

std::string describe(const Realization& r) {
    if (const auto* p = std::get_if<Poset>(&r.metric)) {
        const auto covers = p->covers();
        if (covers.empty()) return "P: trivial relations";
        std::string out = "P:";
        for (auto [a, b] : covers) out += " " + std::to_string(a) + "<=" + std::to_string(b);
        return out;
    }
    std::string out = "F={";
    bool first = true;
    for (const auto& block : std::get<Covering>(r.metric).block_lists()) {
        if (!first) out += ",";
        first = false;
        out += "{";
        for (std::size_t k = 0; k < block.size(); ++k) out += (k ? "," : "") + std::to_string(block[k]);
        out += "}";
    }
    return out + "}";
}

}  // namespace

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

BitVector parse_vector(const std::string& text, int n) {
    BitVector v;
    try {
        v = BitVector::parse(text);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    if (n > 0 && v.dim() != n) {
        throw FormatError("vector \"" + text + "\" has length " + std::to_string(v.dim()) + ", expected " +
                          std::to_string(n));
    }
    return v;
}

json vector_json(int n, word_t w) { return BitVector(n, w).to_string(); }

json vectors_json(const VectorSet& s) {
    json arr = json::array();
    for (const auto& t : s.to_strings()) arr.push_back(t);
    return arr;
}

json to_json(const VectorSet& s) { return json{{"n", s.dim()}, {"vectors", vectors_json(s)}}; }

VectorSet vector_set_from_json(const json& j) {
    const int n = read_dimension(j);
    if (j.contains("vectors")) return read_vectors(j["vectors"], n, "vectors");
    if (j.contains("tile")) return read_vectors(j["tile"], n, "tile");
    throw FormatError("expected a \"vectors\" or \"tile\" field");
}

json to_json(const Tiling& t) {
    return json{{"n", t.n}, {"tile", vectors_json(t.tile)}, {"code", vectors_json(t.code)}};
}

Tiling tiling_from_json(const json& j) {
    const int n = read_dimension(j);
    return {n, read_vectors(field(j, "tile"), n, "tile"), read_vectors(field(j, "code"), n, "code")};
}

json to_json(const Poset& p) {
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    return json{{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    const int n = read_dimension(j);
    const json& arr = field(j, "covers");
    if (!arr.is_array()) throw FormatError("\"covers\" must be an array");
    std::vector<std::pair<int, int>> covers;
    for (const auto& pair : arr) {
        const auto ab = read_int_list(pair, "cover pair");
        if (ab.size() != 2) throw FormatError("cover pairs must have two elements");
        covers.emplace_back(ab[0], ab[1]);
    }
    try {
        return Poset(n, covers);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

json to_json(const Covering& f) {
    json blocks = json::array();
    for (const auto& b : f.block_lists()) blocks.push_back(b);
    return json{{"n", f.size()}, {"blocks", blocks}};
}

Covering covering_from_json(const json& j) {
    const int n = read_dimension(j);
    const json& arr = field(j, "blocks");
    if (!arr.is_array()) throw FormatError("\"blocks\" must be an array");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : arr) blocks.push_back(read_int_list(b, "block"));
    try {
        return Covering(n, blocks);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

json to_json(const WeightTable& w) { return json{{"n", w.dim()}, {"weights", w.values()}}; }

WeightTable weight_table_from_json(const json& j) {
    const int n = read_dimension(j);
    const json& arr = field(j, "weights");
    if (!arr.is_array()) throw FormatError("\"weights\" must be an array");
    std::vector<weight_t> values;
    values.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_number_integer()) throw FormatError("weights must be integers");
        values.push_back(item.get<weight_t>());
    }
    if (values.size() != (std::size_t{1} << n)) {
        throw FormatError("expected 2^" + std::to_string(n) + " weights, got " + std::to_string(values.size()));
    }
    return WeightTable(n, std::move(values));
}

json to_json(const Violation& v, int n) {
    json out{{"kind", to_string(v.kind)}, {"u", vector_json(n, v.u)}};
    if (v.kind == ViolationKind::triangle || v.kind == ViolationKind::support) out["v"] = vector_json(n, v.v);
    return out;
}

json to_json(const WeightVerdict& verdict, int n) {
    json out{{"weight", verdict.is_weight()}, {"ts", verdict.is_ts()}};
    if (verdict.weight_violation) out["weight_violation"] = to_json(*verdict.weight_violation, n);
    if (verdict.support_violation) out["support_violation"] = to_json(*verdict.support_violation, n);
    return out;
}

json to_json(const TilingVerdict& verdict, int n) {
    json out{{"valid", verdict.valid()}, {"cardinality_mismatch", verdict.cardinality_mismatch}};
    if (!verdict.valid()) out["failure"] = to_string(verdict.failure);
    if (verdict.failure == TilingFailure::uncovered || verdict.failure == TilingFailure::overlap) {
        out["point"] = vector_json(n, verdict.point);
    }
    if (verdict.failure == TilingFailure::overlap) {
        out["codewords"] = {vector_json(n, verdict.first_codeword), vector_json(n, verdict.second_codeword)};
    }
    return out;
}

json to_json(const TsBallVerdict& verdict, int n) {
    if (const auto* yes = std::get_if<TsBallYes>(&verdict)) {
        return json{{"status", "yes"}, {"witness", {{"radius", yes->radius}, {"table", to_json(yes->weights)}}}};
    }
    const auto& no = std::get<TsBallNo>(verdict);
    return json{{"status", "no"},
                {"witness", {{"member", vector_json(n, no.member)}, {"missing", vector_json(n, no.missing)}}}};
}

json to_json(const Realization& r) {
    json object = std::visit([](const auto& m) { return to_json(m); }, r.metric);
    return json{{"kind", to_string(r.kind())}, {"object", object}, {"radius", r.radius}, {"label", r.label}};
}

json to_json(const ClassificationRecord& rec) {
    json realizations = json::array();
    for (const auto& r : rec.realizations) realizations.push_back(to_json(r));
    return json{{"tile", vectors_json(rec.tile)},
                {"rank", rec.rank},
                {"size", rec.size},
                {"is_tile", rec.is_tile},
                {"ts", to_json(rec.ts, rec.tile.dim())},
                {"realizations", realizations}};
}

json to_json(const std::vector<ClassificationRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(to_json(rec));
    return arr;
}

std::string render_table(const std::vector<ClassificationRecord>& records) {
    std::ostringstream out;
    for (const auto& rec : records) {
        out << "Tile     " << e_list(rec.tile) << "\n";
        out << "Rank     " << rec.rank << "   Elements " << rec.size << "   tile: " << (rec.is_tile ? "yes" : "no")
            << "   TS-ball: ";
        if (rec.is_ts_ball()) {
            out << "yes";
        } else {
            const auto& no = std::get<TsBallNo>(rec.ts);
            out << "no (" << to_e_notation(no.member) << " in D, " << to_e_notation(no.missing) << " not)";
        }
        out << "\n";
        for (const auto& r : rec.realizations) {
            out << "  radius " << r.radius << "  " << describe(r);
            if (!r.label.empty() && r.label != "search") out << "  [" << r.label << "]";
            out << "\n";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tsperfect::io
