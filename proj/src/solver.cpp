#include "setcolor/solver.hpp"

#include <array>
#include <limits>
#include <string>

#include "setcolor/plane_graph.hpp"

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class Search {
public:
    Search(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand, SolveStats* stats)
        : g_(g), demand_(demand), avail_(lists.begin(), lists.end()), phi_(idx(g.size())),
          colored_(idx(g.size()), 0), stats_(stats) {
        edges_ = g.edges();
        for (const auto& t : triangles(g)) triangles_.push_back({t[0], t[1], t[2]});
    }

    std::optional<SetColoring> run() {
        for (VertexId v = 0; v < g_.size(); ++v) {
            if (demand_[idx(v)] < 0) throw PreconditionError("negative demand at vertex " + std::to_string(v));
            if (demand_[idx(v)] == 0) colored_[idx(v)] = 1;
        }
        if (!consistent() || !search()) return std::nullopt;
        return phi_;
    }

private:
    bool consistent() const {
        for (VertexId v = 0; v < g_.size(); ++v)
            if (!colored_[idx(v)] && avail_[idx(v)].size() < demand_[idx(v)]) return false;
        for (auto [u, v] : edges_)
            if (!colored_[idx(u)] && !colored_[idx(v)] &&
                (avail_[idx(u)] | avail_[idx(v)]).size() < demand_[idx(u)] + demand_[idx(v)])
                return false;
        for (const auto& t : triangles_) {
            if (colored_[idx(t[0])] || colored_[idx(t[1])] || colored_[idx(t[2])]) continue;
            const ColorSet all = avail_[idx(t[0])] | avail_[idx(t[1])] | avail_[idx(t[2])];
            if (all.size() < demand_[idx(t[0])] + demand_[idx(t[1])] + demand_[idx(t[2])]) return false;
        }
        return true;
    }

    bool search() {
        if (stats_ != nullptr) ++stats_->nodes;
        VertexId best = -1;
        long best_count = std::numeric_limits<long>::max();
        for (VertexId v = 0; v < g_.size(); ++v) {
            if (colored_[idx(v)]) continue;
            const long c = binomial(avail_[idx(v)].size(), demand_[idx(v)]);
            if (c < best_count) best = v, best_count = c;
        }
        if (best < 0) return true;
        const VertexId v = best;
        std::vector<ColorSet> saved;
        saved.reserve(g_.neighbors(v).size());
        for (VertexId u : g_.neighbors(v)) saved.push_back(avail_[idx(u)]);

        bool found = false;
        for_each_subset(avail_[idx(v)], demand_[idx(v)], [&](ColorSet choice) {
            phi_[idx(v)] = choice;
            colored_[idx(v)] = 1;
            for (VertexId u : g_.neighbors(v)) avail_[idx(u)] -= choice;
            if (consistent() && search()) {
                found = true;
                return false;
            }
            std::size_t k = 0;
            for (VertexId u : g_.neighbors(v)) avail_[idx(u)] = saved[k++];
            colored_[idx(v)] = 0;
            phi_[idx(v)] = {};
            return true;
        });
        return found;
    }

    const Graph& g_;
    std::span<const int> demand_;
    std::vector<ColorSet> avail_;
    SetColoring phi_;
    std::vector<char> colored_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::array<VertexId, 3>> triangles_;
    SolveStats* stats_;
};

}  // namespace

std::optional<SetColoring> solve(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                                 const SolveOptions& options, SolveStats* stats) {
    if (lists.size() != idx(g.size()) || demand.size() != idx(g.size()))
        throw PreconditionError("solve: per-vertex data does not match the vertex count");
    if (g.size() > options.max_vertices)
        throw SearchGuardError("solve: " + std::to_string(g.size()) + " vertices exceed the search guard of " +
                               std::to_string(options.max_vertices));
    return Search(g, lists, demand, stats).run();
}

}  // namespace setcolor
