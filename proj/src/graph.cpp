#include "setcolor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace setcolor {

Graph::Graph(std::vector<std::vector<VertexId>> adjacency) : adj_(std::move(adjacency)) {
    const int n = size();
    sorted_ = adj_;
    long total = 0;
    for (int v = 0; v < n; ++v) {
        auto& s = sorted_[static_cast<std::size_t>(v)];
        for (VertexId u : s) {
            if (u < 0 || u >= n)
                throw GraphError("vertex " + std::to_string(v) + " has out-of-range neighbor " + std::to_string(u));
            if (u == v) throw GraphError("self-loop at vertex " + std::to_string(v));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw GraphError("duplicate neighbor in adjacency of vertex " + std::to_string(v));
        total += static_cast<long>(s.size());
    }
    for (int v = 0; v < n; ++v)
        for (VertexId u : sorted_[static_cast<std::size_t>(v)])
            if (!std::binary_search(sorted_[static_cast<std::size_t>(u)].begin(),
                                    sorted_[static_cast<std::size_t>(u)].end(), v))
                throw GraphError("asymmetric adjacency: " + std::to_string(u) + " lists no " + std::to_string(v) +
                                 " although " + std::to_string(v) + " lists " + std::to_string(u));
    edges_ = static_cast<int>(total / 2);
}

Graph Graph::from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return Graph(std::move(adj));
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& s = sorted_[static_cast<std::size_t>(u)];
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int v = 0; v < size(); ++v)
        for (VertexId u : sorted_[static_cast<std::size_t>(v)])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
    std::vector<int> index(static_cast<std::size_t>(size()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::vector<VertexId>> adj(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (VertexId u : neighbors(keep[i]))
            if (index[static_cast<std::size_t>(u)] >= 0) adj[i].push_back(index[static_cast<std::size_t>(u)]);
    return Graph(std::move(adj));
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<int> seen(static_cast<std::size_t>(size()), 0);
    std::vector<std::vector<VertexId>> out;
    for (int s = 0; s < size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<VertexId> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId u : neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const { return components().size() <= 1; }

}  // namespace setcolor
