#pragma once

#include <functional>
#include <span>
#include <vector>

#include "setcolor/coloring.hpp"

namespace setcolor {

/// Cell sizes of a Venn diagram on k lists: entry m-1 is the number of colors lying
/// in exactly the lists whose bits are set in m (m = 1 .. 2^k - 1).
using CellVector = std::vector<int>;

/// Builds lists from cell sizes, numbering colors 1, 2, ... cell by cell.
ListAssignment lists_from_cells(int k, std::span<const int> cells);

/// Calls fn for every cell vector whose list sizes are exactly `sizes`. Every list
/// assignment with these sizes equals exactly one of them up to renaming colors.
void for_each_cell_vector(std::span<const int> sizes, const std::function<void(const CellVector&)>& fn);

/// Calls fn for every cell vector on k lists with at most `max_total` colors in all.
void for_each_cell_vector_bounded(int k, int max_total, const std::function<void(const CellVector&)>& fn);

/// All list assignments with the given sizes, up to renaming colors.
std::vector<ListAssignment> venn_assignments(std::span<const int> sizes);

}  // namespace setcolor
