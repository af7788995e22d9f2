#pragma once

#include <optional>
#include <span>
#include <vector>

#include "setcolor/color_set.hpp"
#include "setcolor/graph.hpp"

namespace setcolor {

/// A facial walk. `walk[i] -> walk[i+1]` (cyclically) are the directed edges of the
/// face, and `corner[i]` is the rotation index of the corner the walk turns through at
/// walk[i]. Isolated vertices own a single face with an empty walk.
struct Face {
    int id = 0;
    std::vector<VertexId> walk;
    std::vector<int> corner;

    int length() const { return static_cast<int>(walk.size()); }
};

/// Plane graph given by a rotation system: rotation(v) lists the neighbors of v in
/// clockwise order. Corner (v, j) sits between rotation(v)[j] and rotation(v)[j+1].
/// Faces are traced with "next edge = rotation successor of the reversed edge".
/// Immutable after construction.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates the rotation system and traces faces. Throws GraphError on
    /// self-loops, repeated neighbors, asymmetric adjacency, or when some component
    /// violates Euler's formula.
    static PlaneGraph build(std::vector<std::vector<VertexId>> rotation);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.size(); }
    int edge_count() const { return graph_.edge_count(); }
    int degree(VertexId v) const { return graph_.degree(v); }
    bool adjacent(VertexId u, VertexId v) const { return graph_.adjacent(u, v); }
    std::span<const VertexId> rotation(VertexId v) const { return graph_.neighbors(v); }

    /// Index of u in rotation(v); -1 when not adjacent.
    int position(VertexId v, VertexId u) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
    int corner_face(VertexId v, int j) const { return corner_face_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]; }
    /// Face whose walk contains the directed edge u -> v.
    int dart_face(VertexId u, VertexId v) const;

    /// Induced plane subgraph on `keep`; vertex i of the result is keep[i]. Faces are
    /// re-traced from the restricted rotations.
    PlaneGraph induced(std::span<const VertexId> keep) const;
    /// Mirror embedding: every rotation reversed.
    PlaneGraph mirrored() const;

    std::vector<std::vector<VertexId>> rotations() const;

private:
    Graph graph_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> corner_face_;
};

/// Vertices 1-3 forming a clique, each carrying a fixed color set of size 3; the sets
/// are pairwise disjoint.
struct PrecoloredClique {
    std::vector<VertexId> vertices;
    std::vector<ColorSet> colors;

    bool contains(VertexId v) const;
    /// Throws GraphError unless the invariants hold in g.
    void validate(const Graph& g) const;
};

// ---- structural queries -------------------------------------------------------

/// Every 4-cycle and 5-cycle of g, each listed once: starting at its smallest vertex,
/// direction chosen so that the second vertex is smaller than the last.
std::vector<std::vector<VertexId>> forbidden_cycles(const Graph& g);
bool in_class(const Graph& g);

bool is_internal(VertexId v, std::span<const VertexId> z);

enum class VertexClass { KVertex, KPlusOnly, Neither };
/// KVertex: internal with degree exactly k (such a vertex is also a k+-vertex).
/// KPlusOnly: in z or of degree > k, so a k+-vertex but not a k-vertex.
VertexClass vertex_class(const Graph& g, VertexId v, std::span<const VertexId> z, int k);
bool is_k_vertex(const Graph& g, VertexId v, std::span<const VertexId> z, int k);
bool is_k_plus_vertex(const Graph& g, VertexId v, std::span<const VertexId> z, int k);

std::vector<VertexId> cut_vertices(const Graph& g);
/// All triangles, each as a sorted triple.
std::vector<std::vector<VertexId>> triangles(const Graph& g);
/// Triangles of g that bound no face of the embedding.
std::vector<std::vector<VertexId>> nonfacial_triangles(const PlaneGraph& g);

struct Split {
    PlaneGraph first;               ///< contains z (or the separator plus one side)
    std::vector<VertexId> first_map;   ///< first-graph id -> original id
    PlaneGraph second;
    std::vector<VertexId> second_map;
};

/// Splits g at a separator (a cut vertex or a separating triangle): both parts keep the
/// separator, the first part takes the components of g - separator meeting z (or the
/// lowest-numbered component when z lies inside the separator), the second takes the
/// rest. Throws GraphError when the separator does not separate.
Split split_at(const PlaneGraph& g, std::span<const VertexId> separator, std::span<const VertexId> z);

}  // namespace setcolor
