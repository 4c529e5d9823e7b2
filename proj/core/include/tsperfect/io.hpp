#ifndef TSPERFECT_IO_HPP
#define TSPERFECT_IO_HPP

// JSON file formats. Vectors always use the '0'/'1' text form, leftmost
// character = coordinate 1.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsperfect/classify.hpp"
#include "tsperfect/hypercube.hpp"
#include "tsperfect/metrics.hpp"
#include "tsperfect/tilings.hpp"

namespace tsperfect::io {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json(const std::filesystem::path& path);

/// Parses a vector; when n > 0 the length must equal n.
BitVector parse_vector(const std::string& text, int n = 0);

json vector_json(int n, word_t w);
json vectors_json(const VectorSet& s);

/// {"n", "vectors"}. A tiling document is accepted too; its tile is read.
json to_json(const VectorSet& s);
VectorSet vector_set_from_json(const json& j);

json to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);

json to_json(const Poset& p);
Poset poset_from_json(const json& j);

json to_json(const Covering& f);
Covering covering_from_json(const json& j);

json to_json(const WeightTable& w);
/// Reads {"n", "weights"} without checking the weight axioms.
WeightTable weight_table_from_json(const json& j);

json to_json(const Violation& v, int n);
json to_json(const WeightVerdict& verdict, int n);
json to_json(const TilingVerdict& verdict, int n);
json to_json(const TsBallVerdict& verdict, int n);
json to_json(const Realization& r);
json to_json(const ClassificationRecord& rec);
json to_json(const std::vector<ClassificationRecord>& records);

/// Plain-text table: tile, rank, elements, tile?, TS?, realizations.
std::string render_table(const std::vector<ClassificationRecord>& records);

}  // namespace tsperfect::io

#endif  // TSPERFECT_IO_HPP
