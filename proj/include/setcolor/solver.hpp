#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "setcolor/coloring.hpp"

namespace setcolor {

class SearchGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct SolveOptions {
    /// Instances with more vertices are refused.
    int max_vertices = 16;
};

struct SolveStats {
    long nodes = 0;
};

/// Exact (L:f)-coloring by backtracking. Vertices are picked by fewest remaining
/// choices (ties: lowest id), color subsets are tried in lexicographic order, and a
/// branch is cut as soon as some uncolored vertex, edge or triangle cannot meet its
/// total demand from the union of its remaining lists. Deterministic.
/// Returns nullopt for UNSAT; throws SearchGuardError past the vertex guard.
std::optional<SetColoring> solve(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                                 const SolveOptions& options = {}, SolveStats* stats = nullptr);

}  // namespace setcolor
