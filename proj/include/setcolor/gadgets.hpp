#pragma once

// Constructive extension lemmas for small gadgets. Every op takes the lists in a
// fixed vertex order (documented per op), returns phi in the same order, checks its
// hypotheses first and throws HypothesisError when they fail. Lists larger than the
// hypothesis sizes are cut down first, keeping pinned colors and the colors of a
// witness coloring of the sub-structure that the hypothesis requires to be colorable.

#include <span>
#include <utility>

#include "setcolor/coloring.hpp"

namespace setcolor {

class HypothesisError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

enum class PendantEdge { None, V1V2, V2V3, V1V3 };

// Gadget graphs, vertex numbering matching the ops below.
Graph path_graph(int k);
Graph cycle_graph(int k);
/// v1 v2 v3 triangle plus the edge v3 v4.
Graph lollipop_graph();
/// Center 0 with `leaves` leaves; `edge_last_two` adds an edge between the last two leaves.
Graph claw_graph(int leaves, bool edge_last_two);
/// Order v, v1, v2, v3, u1: claw at v, u1 pendant at v1, optional edge among the vi.
Graph claw3_pendant_graph(PendantEdge edge);
/// Order u1, v1, v, v2, u2, v3: path u1 v1 v v2 u2, leaf v3 at v, optional edge v1 v3.
Graph path_plus_leaf_graph(bool edge_v1v3);

/// Path v1 v2 v3, |L| >= (5, 8, 5). pin_v1 (at most 2 colors) ends up in phi(v1) and
/// pin_v3 (at most 1 color) in phi(v3).
SetColoring color_p3(std::span<const ColorSet> lists, ColorSet pin_v1 = {}, ColorSet pin_v3 = {});

/// Path v1..v4, |L| >= (5, 8, 5, 5), v3 v4 colorable. Pins hold at most one color each.
SetColoring color_p4(std::span<const ColorSet> lists, ColorSet pin_v1 = {}, ColorSet pin_v4 = {});

/// Path v1..v5, |L| >= (5, 8, 5, 5, 5), v3 v4 v5 colorable. A pin {b} at v5 must
/// differ from L(v4) minus L(v3) (evaluated on the trimmed lists).
SetColoring color_p5(std::span<const ColorSet> lists, ColorSet pin_v1 = {}, ColorSet pin_v5 = {});

/// Path v1..v6, |L| >= (5, 8, 5, 5, 5, 5), v3..v6 colorable.
SetColoring color_p6(std::span<const ColorSet> lists, ColorSet pin_v1 = {});

/// Path v1..vk, 5 <= k <= 7, |L(v3)| >= 8 and all other lists >= 5, P - v3 colorable.
SetColoring color_path_v3big(std::span<const ColorSet> lists);

/// Triangle v1 v2 v3 via the Hall test; throws HypothesisError naming the failed condition.
SetColoring color_triangle(std::span<const ColorSet> lists);

/// Lollipop (triangle v1 v2 v3, edge v3 v4), |L| >= (5, 8, 8, 5), triangle colorable.
SetColoring color_lollipop(std::span<const ColorSet> lists);

/// 6-cycle v1..v6 (indices 0..5 in cycle order), all lists >= 5, the two vertices of
/// `s` have lists >= 8 and C - s is colorable.
SetColoring color_c6(std::span<const ColorSet> lists, std::pair<int, int> s);

/// Claw, order v, v1, v2, v3; |L(v)| >= 8, leaves >= 5.
SetColoring color_claw3(std::span<const ColorSet> lists);

/// Claw with four leaves, order v, v1..v4. Without the edge v3 v4 all leaves need 5;
/// with it v3, v4 need 8 and the triangle v v3 v4 must be colorable.
SetColoring color_claw4(std::span<const ColorSet> lists, bool edge_v3v4);

/// Order v, v1, v2, v3, u1 (see claw3_pendant_graph). |L(v)|, |L(u1)| >= 5 and
/// |L(vi)| >= 2 + 3 deg(vi); H - v1 colorable.
SetColoring color_claw3_pendant(std::span<const ColorSet> lists, PendantEdge edge);

/// Order u1, v1, v, v2, u2, v3 (see path_plus_leaf_graph). |L(u1)|, |L(v)|, |L(u2)| >= 5,
/// |L(v2)| >= 8, |L(v3)| >= 2 + 3 deg(v3), |L(v1)| >= 3 deg(v1) - 1; H - v2 colorable.
SetColoring color_path_plus_leaf(std::span<const ColorSet> lists, bool edge_v1v3);

}  // namespace setcolor
