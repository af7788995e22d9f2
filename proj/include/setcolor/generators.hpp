#pragma once

// Plane graph families used by tests, the benchmark and the CLI.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "setcolor/coloring.hpp"
#include "setcolor/plane_graph.hpp"

namespace setcolor {

/// Rotation system of a straight-line drawing: neighbors sorted clockwise by angle.
PlaneGraph from_drawing(const std::vector<std::pair<double, double>>& points,
                        const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Brick-wall patch of the hexagonal lattice with rows x cols vertices (rows, cols >= 2).
PlaneGraph hex_fragment(int rows, int cols);

/// `count` triangles in a row, consecutive ones joined by a path of `path_edges` edges.
PlaneGraph triangle_chain(int count, int path_edges);

/// `count` >= 2 triangles on a ring, consecutive ones joined by paths of `path_edges` edges.
PlaneGraph triangle_ring(int count, int path_edges);

/// Grows a plane graph by local operations that keep the embedding planar. Each op
/// names a corner (v, j) of v: the new edges are drawn into that corner's face.
class PlaneBuilder {
public:
    /// Starts from a k-cycle (k >= 3).
    explicit PlaneBuilder(int cycle_length);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    const std::vector<std::vector<VertexId>>& rotation() const { return rot_; }

    /// New vertex of degree 1 inside corner (v, j).
    VertexId add_pendant(VertexId v, int corner);
    /// Path with `edges` >= 1 edges from corner (a, ca) to corner (b, cb); the two corners
    /// must lie on one face and a != b. Returns the new internal vertices.
    std::vector<VertexId> add_ear(VertexId a, int ca, VertexId b, int cb, int edges);
    /// New vertex adjacent to u and v, placed in the face containing the dart u -> v.
    VertexId add_triangle(VertexId u, VertexId v);

    PlaneGraph build() const { return PlaneGraph::build(rot_); }

private:
    std::vector<std::vector<VertexId>> rot_;
    void insert_at_corner(VertexId v, int corner, VertexId u);
};

struct RandomGraphOptions {
    int min_vertices = 10;
    int max_vertices = 60;
    double triangle_weight = 0.35;
    double ear_weight = 0.5;
    double pendant_weight = 0.15;
    int max_ear_edges = 6;
    /// Afterwards add chords inside faces until none keeps the graph in the class.
    bool saturate = false;
};

/// Random connected plane graph without 4- and 5-cycles with a vertex count drawn from
/// [min_vertices, max_vertices]. Deterministic in the seed.
PlaneGraph random_class_graph(std::uint64_t seed, const RandomGraphOptions& options = {});

/// Random 3-regular plane graph on `vertices` (even, >= 4) vertices: K4 grown by
/// joining the midpoints of two edges of one face.
PlaneGraph random_cubic_plane(int vertices, std::uint64_t seed);

/// Replaces every vertex of a 3-regular plane graph by a triangle. A face of length k
/// becomes a 2k-face, so the result has no 4- or 5-cycles and minimum degree 3.
PlaneGraph truncate_cubic(const PlaneGraph& g);

/// Uniform integer in [0, bound) by rejection on the raw engine output (portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// n lists, each a uniform `size`-subset of {1..universe}.
ListAssignment random_lists(int n, std::uint64_t seed, int size = 11, int universe = 33);

}  // namespace setcolor
