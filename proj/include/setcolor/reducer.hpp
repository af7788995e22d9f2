#pragma once

// Reducible configurations and the reduce / recurse / extend colorer.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setcolor/coloring.hpp"
#include "setcolor/gadgets.hpp"
#include "setcolor/plane_graph.hpp"

namespace setcolor {

enum class ConfigKind { Deg2, Path33, Tria3, Cycle6, Vert4, Path34, Vert5M, Vert5N3, Vert5P43 };

/// Search priority order.
inline constexpr std::array<ConfigKind, 9> kAllConfigKinds = {
    ConfigKind::Deg2,   ConfigKind::Path33, ConfigKind::Tria3,  ConfigKind::Cycle6,   ConfigKind::Vert4,
    ConfigKind::Path34, ConfigKind::Vert5M, ConfigKind::Vert5N3, ConfigKind::Vert5P43,
};

std::string_view config_name(ConfigKind k);

/// A configuration found in a graph. `witness` lists the vertices of the subgraph H in
/// the order the extending gadget op expects:
///   Deg2      v
///   Path33    v1 .. vk (3 <= k <= 6)
///   Tria3     v1 v2 v3 v4 (triangle v1 v2 v3, v4 pendant at v3)
///   Cycle6    v1 .. v6 in cycle order; `pair` holds the positions of the two deleted 3-vertices
///   Vert4     v v1 v2 v3
///   Path34    v1 .. vk (5 <= k <= 7)
///   Vert5M    v v1 v2 v3 v4; `edge` when v3 v4 is an edge
///   Vert5N3   v v1 v2 v3 u1; `pendant` names the edge among v1, v2, v3
///   Vert5P43  u1 v1 v v2 u2 v3; `edge` when v1 v3 is an edge
struct Configuration {
    ConfigKind kind = ConfigKind::Deg2;
    std::vector<VertexId> witness;
    std::vector<VertexId> delete_set;
    std::pair<int, int> pair{0, 1};
    bool edge = false;
    PendantEdge pendant = PendantEdge::None;

    std::string describe() const;
};

/// First configuration in priority order whose hypotheses hold in g (all witness
/// vertices internal, degrees and adjacencies as required, H induced as the gadget
/// expects). nullopt when none matches.
std::optional<Configuration> find_configuration(const PlaneGraph& g, std::span<const VertexId> z);

/// All configurations of one kind (each witness once per labeling the search produces).
std::vector<Configuration> find_all(const PlaneGraph& g, std::span<const VertexId> z, ConfigKind kind);

/// Independent re-check of a configuration's hypotheses; returns the first failed
/// condition, or an empty string when all hold.
std::string check_configuration(const Graph& g, std::span<const VertexId> z, const Configuration& c);

struct RestrictedLists {
    std::vector<VertexId> vertices;  ///< H, in the given order
    ListAssignment lists;            ///< L_psi(v) per vertex of H
};

/// L_psi(v) = L(v) minus the psi-colors of neighbors outside H. psi is indexed by the
/// vertices of g; entries of H are ignored. Throws PreconditionError when psi is not a
/// valid (L:3)-coloring of G - V(H).
RestrictedLists restrict_lists(const Graph& g, std::span<const ColorSet> lists, std::span<const VertexId> h,
                               std::span<const ColorSet> psi);

/// Runs the configuration's gadget op on lists for the witness vertices.
SetColoring extend_configuration(const Configuration& c, std::span<const ColorSet> witness_lists);

struct ReduceStats {
    std::array<int, 9> uses{};  ///< per ConfigKind
    int base_cases = 0;
    int cut_splits = 0;
    int triangle_splits = 0;
    int max_depth = 0;
};

struct ReduceOutcome {
    bool ok = false;
    SetColoring coloring;
    std::string failure;  ///< dump when !ok
    ReduceStats stats;
};

/// Largest graph solved by exact search instead of reduction.
inline constexpr int kBaseCaseVertices = 12;

/// (L:3)-coloring of a plane graph without 4- and 5-cycles. Vertices outside z need
/// lists of at least 11 colors; z (possibly empty) must be a clique whose lists are
/// pairwise disjoint 3-sets. Throws GraphError / PreconditionError on bad input;
/// internal dead ends are reported as a failed outcome with a dump.
ReduceOutcome reduce_and_extend(const PlaneGraph& g, std::span<const ColorSet> lists, std::span<const VertexId> z);

/// One reduction step over a given configuration of g: color g minus its delete set by
/// reduce_and_extend's recursion, then extend over the witness. Same preconditions.
ReduceOutcome reduce_with(const PlaneGraph& g, std::span<const ColorSet> lists, std::span<const VertexId> z,
                          const Configuration& c);

struct IndependentSet {
    std::vector<VertexId> vertices;
    int color = 0;
    int n = 0;
    double ratio() const { return n == 0 ? 1.0 : static_cast<double>(vertices.size()) / n; }
};

/// Largest color class of a set coloring with |phi(v)| = 3 (ties: lowest color).
/// Throws PreconditionError when phi is not such a coloring of g.
IndependentSet independence_ratio(const Graph& g, std::span<const ColorSet> phi);

}  // namespace setcolor
