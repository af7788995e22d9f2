#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "setcolor/color_set.hpp"

namespace setcolor {

/// Colors a clique whose vertex i needs demand[i] colors from lists[i], all sets
/// pairwise disjoint. Builds the bipartite graph between the colors of the union and
/// one slot per unit of demand (color c joined to the slots of vertex i iff c is in
/// lists[i]) and looks for a slot-saturating matching by augmenting paths.
/// Returns nullopt when no such matching exists.
std::optional<std::vector<ColorSet>> clique_coloring(std::span<const ColorSet> lists, std::span<const int> demand);

/// Which of the three Hall conditions for an (L:3)-coloring of a triangle fails.
enum class HallFailure { None, Single, Pair, Triple };

struct HallCertificate {
    std::array<int, 3> sizes{};        ///< |L(v_i)|
    std::array<int, 3> pair_unions{};  ///< |L(v1) u L(v2)|, |L(v1) u L(v3)|, |L(v2) u L(v3)|
    int triple_union = 0;
    HallFailure failure = HallFailure::None;
    /// Vertices (0-based) of the violated subset; empty when none failed.
    std::vector<int> witness;
};

struct TriangleResult {
    std::optional<std::array<ColorSet, 3>> coloring;
    HallCertificate certificate;
    bool colorable() const { return coloring.has_value(); }
};

/// (L:3)-colorability of a triangle: decided by the Hall conditions (every list has 3
/// colors, every two lists cover 6, all three cover 9), and when they hold the coloring
/// is read off a matching of colors to the nine demand slots.
TriangleResult triangle_colorable(const std::array<ColorSet, 3>& lists);

}  // namespace setcolor
