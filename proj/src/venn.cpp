#include "setcolor/venn.hpp"

#include <algorithm>
#include <stdexcept>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void exact_rec(int k, int mask, std::vector<int>& remaining, CellVector& cells,
               const std::function<void(const CellVector&)>& fn) {
    const int masks = (1 << k) - 1;
    if (mask > masks) {
        for (int r : remaining)
            if (r != 0) return;
        fn(cells);
        return;
    }
    int cap = 1 << 30;
    for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) cap = std::min(cap, remaining[idx(i)]);
    for (int c = 0; c <= cap; ++c) {
        cells[idx(mask - 1)] = c;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) remaining[idx(i)] -= c;
        exact_rec(k, mask + 1, remaining, cells, fn);
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) remaining[idx(i)] += c;
    }
    cells[idx(mask - 1)] = 0;
}

void bounded_rec(int k, int mask, int left, CellVector& cells, const std::function<void(const CellVector&)>& fn) {
    const int masks = (1 << k) - 1;
    if (mask > masks) {
        fn(cells);
        return;
    }
    for (int c = 0; c <= left; ++c) {
        cells[idx(mask - 1)] = c;
        bounded_rec(k, mask + 1, left - c, cells, fn);
    }
    cells[idx(mask - 1)] = 0;
}

}  // namespace

ListAssignment lists_from_cells(int k, std::span<const int> cells) {
    if (cells.size() != idx((1 << k) - 1)) throw std::invalid_argument("lists_from_cells: wrong number of cells");
    ListAssignment lists(idx(k));
    int color = 1;
    for (int mask = 1; mask < (1 << k); ++mask)
        for (int c = 0; c < cells[idx(mask - 1)]; ++c, ++color)
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) lists[idx(i)].insert(color);
    return lists;
}

void for_each_cell_vector(std::span<const int> sizes, const std::function<void(const CellVector&)>& fn) {
    const int k = static_cast<int>(sizes.size());
    if (k < 1 || k > 6) throw std::invalid_argument("for_each_cell_vector: supports 1..6 lists");
    std::vector<int> remaining(sizes.begin(), sizes.end());
    CellVector cells(idx((1 << k) - 1), 0);
    exact_rec(k, 1, remaining, cells, fn);
}

void for_each_cell_vector_bounded(int k, int max_total, const std::function<void(const CellVector&)>& fn) {
    if (k < 1 || k > 6) throw std::invalid_argument("for_each_cell_vector_bounded: supports 1..6 lists");
    CellVector cells(idx((1 << k) - 1), 0);
    bounded_rec(k, 1, max_total, cells, fn);
}

std::vector<ListAssignment> venn_assignments(std::span<const int> sizes) {
    std::vector<ListAssignment> out;
    const int k = static_cast<int>(sizes.size());
    for_each_cell_vector(sizes, [&](const CellVector& cells) { out.push_back(lists_from_cells(k, cells)); });
    return out;
}

}  // namespace setcolor
