#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setcolor {

/// Dense vertex index 0..n-1.
using VertexId = int;

/// Raised for malformed or inconsistent graph input.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph over dense ids. Neighbor lists keep their insertion
/// order, so a plane graph can hand out its rotation as the adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::vector<VertexId>> adjacency);

    static Graph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges);

    int size() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edges_; }
    int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(VertexId u, VertexId v) const;

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Subgraph induced by `keep` (in that order); vertex i of the result is keep[i].
    Graph induced(std::span<const VertexId> keep) const;

    /// Connected components, each sorted ascending, ordered by smallest member.
    std::vector<std::vector<VertexId>> components() const;
    bool connected() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<VertexId>> sorted_;
    int edges_ = 0;
};

}  // namespace setcolor
