#include "tsperfect/exact_cover.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tsperfect {

ExactCover::ExactCover(std::size_t columns) : columns_(columns), size_(columns + 1, 0) {
    if (columns >= std::numeric_limits<std::uint32_t>::max() / 2) {
        throw std::invalid_argument("too many exact-cover columns");
    }
    cells_.resize(columns + 1);
    for (std::uint32_t c = 0; c <= columns; ++c) {
        cells_[c].left = c == 0 ? static_cast<std::uint32_t>(columns) : c - 1;
        cells_[c].right = c == columns ? 0 : c + 1;
        cells_[c].up = cells_[c].down = c;
        cells_[c].column = c;
        cells_[c].row = std::numeric_limits<std::uint32_t>::max();
    }
}

std::size_t ExactCover::add_row(std::span<const std::uint32_t> columns) {
    if (columns.empty()) throw std::invalid_argument("exact-cover row must touch a column");
    const auto row = static_cast<std::uint32_t>(row_head_.size());
    const auto first = static_cast<std::uint32_t>(cells_.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] >= columns_) throw std::invalid_argument("exact-cover column out of range");
        const std::uint32_t header = columns[k] + 1;
        const auto id = static_cast<std::uint32_t>(cells_.size());
        Node node{};
        node.column = header;
        node.row = row;
        node.up = cells_[header].up;
        node.down = header;
        node.left = k == 0 ? id : id - 1;
        node.right = first;
        cells_.push_back(node);
        cells_[cells_[header].up].down = id;
        cells_[header].up = id;
        ++size_[header];
        if (k > 0) {
            cells_[id - 1].right = id;
            cells_[first].left = id;
        }
    }
    row_head_.push_back(first);
    return row;
}

void ExactCover::cover(std::uint32_t c) {
    cells_[cells_[c].right].left = cells_[c].left;
    cells_[cells_[c].left].right = cells_[c].right;
    for (std::uint32_t i = cells_[c].down; i != c; i = cells_[i].down) {
        for (std::uint32_t j = cells_[i].right; j != i; j = cells_[j].right) {
            cells_[cells_[j].down].up = cells_[j].up;
            cells_[cells_[j].up].down = cells_[j].down;
            --size_[cells_[j].column];
        }
    }
}

void ExactCover::uncover(std::uint32_t c) {
    for (std::uint32_t i = cells_[c].up; i != c; i = cells_[i].up) {
        for (std::uint32_t j = cells_[i].left; j != i; j = cells_[j].left) {
            ++size_[cells_[j].column];
            cells_[cells_[j].down].up = j;
            cells_[cells_[j].up].down = j;
        }
    }
    cells_[cells_[c].right].left = c;
    cells_[cells_[c].left].right = c;
}

bool ExactCover::search(std::vector<std::size_t>& partial) {
    ++nodes_;
    if (cells_[0].right == 0) return true;

    std::uint32_t best = cells_[0].right;
    for (std::uint32_t c = cells_[best].right; c != 0; c = cells_[c].right) {
        if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) return false;

    cover(best);
    for (std::uint32_t r = cells_[best].down; r != best; r = cells_[r].down) {
        partial.push_back(cells_[r].row);
        for (std::uint32_t j = cells_[r].right; j != r; j = cells_[j].right) cover(cells_[j].column);
        const bool found = search(partial);
        for (std::uint32_t j = cells_[r].left; j != r; j = cells_[j].left) uncover(cells_[j].column);
        if (found) {
            uncover(best);
            return true;
        }
        partial.pop_back();
    }
    uncover(best);
    return false;
}

std::optional<std::vector<std::size_t>> ExactCover::solve(std::span<const std::size_t> forced,
                                                          std::span<const std::size_t> excluded) {
    nodes_ = 0;
    for (std::size_t r : forced) {
        if (r >= rows()) throw std::invalid_argument("forced row out of range");
    }
    for (std::size_t r : excluded) {
        if (r >= rows()) throw std::invalid_argument("excluded row out of range");
    }

    // Detach excluded rows from their columns; the row keeps its own links so
    // it can be put back in reverse order.
    std::vector<std::size_t> detached;
    {
        std::vector<bool> seen(rows(), false);
        for (std::size_t r : excluded) {
            if (seen[r]) continue;
            seen[r] = true;
            detached.push_back(r);
            std::uint32_t j = row_head_[r];
            do {
                cells_[cells_[j].down].up = cells_[j].up;
                cells_[cells_[j].up].down = cells_[j].down;
                --size_[cells_[j].column];
                j = cells_[j].right;
            } while (j != row_head_[r]);
        }
    }

    // Select the forced rows by covering their columns. A column hit twice
    // means the forced rows overlap and no cover exists.
    std::vector<std::uint32_t> covered;
    std::vector<bool> is_covered(columns_ + 1, false);
    bool conflict = false;
    for (std::size_t r : forced) {
        std::uint32_t j = row_head_[r];
        do {
            const std::uint32_t c = cells_[j].column;
            if (is_covered[c]) {
                conflict = true;
            } else {
                is_covered[c] = true;
                cover(c);
                covered.push_back(c);
            }
            j = cells_[j].right;
        } while (j != row_head_[r] && !conflict);
        if (conflict) break;
    }

    std::optional<std::vector<std::size_t>> result;
    if (!conflict) {
        std::vector<std::size_t> partial(forced.begin(), forced.end());
        if (search(partial)) {
            std::sort(partial.begin(), partial.end());
            partial.erase(std::unique(partial.begin(), partial.end()), partial.end());
            result = std::move(partial);
        }
    }

    for (auto it = covered.rbegin(); it != covered.rend(); ++it) uncover(*it);
    for (auto it = detached.rbegin(); it != detached.rend(); ++it) {
        const std::uint32_t head = row_head_[*it];
        std::uint32_t j = cells_[head].left;
        while (true) {
            ++size_[cells_[j].column];
            cells_[cells_[j].down].up = j;
            cells_[cells_[j].up].down = j;
            if (j == head) break;
            j = cells_[j].left;
        }
    }
    return result;
}

}  // namespace tsperfect
