#ifndef TSPERFECT_EXACT_COVER_HPP
#define TSPERFECT_EXACT_COVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tsperfect {

/// Algorithm X over a dancing-links sparse matrix, branching on the column
/// with the fewest remaining rows. Every column is primary.
///
/// The structure is mutated during search and restored on return, so one
/// instance can answer several queries in sequence but not concurrently.
class ExactCover {
public:
    explicit ExactCover(std::size_t columns);

    /// Returns the row index. Columns must be distinct and in range.
    std::size_t add_row(std::span<const std::uint32_t> columns);

    std::size_t rows() const noexcept { return row_head_.size(); }
    std::size_t columns() const noexcept { return columns_; }

    /// First exact cover found that contains every row in `forced` and none in
    /// `excluded`. Row indices in the result are sorted.
    std::optional<std::vector<std::size_t>> solve(std::span<const std::size_t> forced = {},
                                                  std::span<const std::size_t> excluded = {});

    /// Nodes visited by the last solve() call.
    std::uint64_t last_node_count() const noexcept { return nodes_; }

private:
    struct Node {
        std::uint32_t left, right, up, down, column;
        std::uint32_t row;
    };

    void cover(std::uint32_t c);
    void uncover(std::uint32_t c);
    bool search(std::vector<std::size_t>& partial);

    std::size_t columns_;
    std::vector<Node> cells_;  // [0] root, [1..columns] headers, then cells
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> row_head_;
    std::uint64_t nodes_ = 0;
};

}  // namespace tsperfect

#endif  // TSPERFECT_EXACT_COVER_HPP
