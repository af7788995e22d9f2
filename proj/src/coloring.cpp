#include "setcolor/coloring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_sizes(const Graph& g, std::size_t a, std::size_t b, const char* what) {
    if (a != idx(g.size()) || b != idx(g.size()))
        throw PreconditionError(std::string(what) + ": per-vertex data does not match the vertex count");
}

}  // namespace

std::string ColorSet::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, ColorSet s) {
    os << '{';
    bool first = true;
    for (int c : s.colors()) {
        os << (first ? "" : ",") << c;
        first = false;
    }
    return os << '}';
}

Verdict check_set_coloring(const Graph& g, std::span<const int> demand, std::span<const ColorSet> phi) {
    check_sizes(g, demand.size(), phi.size(), "check_set_coloring");
    for (VertexId v = 0; v < g.size(); ++v) {
        if (phi[idx(v)].size() != demand[idx(v)])
            return {false,
                    "vertex " + std::to_string(v) + " has " + std::to_string(phi[idx(v)].size()) +
                        " colors but demand " + std::to_string(demand[idx(v)]),
                    v, -1};
        for (VertexId u : g.neighbors(v))
            if (v < u && phi[idx(v)].intersects(phi[idx(u)]))
                return {false,
                        "edge " + std::to_string(v) + "-" + std::to_string(u) + " shares colors " +
                            (phi[idx(v)] & phi[idx(u)]).to_string(),
                        v, u};
    }
    return {};
}

Verdict check_coloring(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                       std::span<const ColorSet> phi) {
    check_sizes(g, lists.size(), phi.size(), "check_coloring");
    for (VertexId v = 0; v < g.size(); ++v)
        if (!phi[idx(v)].subset_of(lists[idx(v)]))
            return {false,
                    "vertex " + std::to_string(v) + " uses " + (phi[idx(v)] - lists[idx(v)]).to_string() +
                        " outside its list",
                    v, -1};
    return check_set_coloring(g, demand, phi);
}

ReducedInstance reduce_lists(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                             std::span<const ColorSet> psi) {
    check_sizes(g, lists.size(), psi.size(), "reduce_lists");
    check_sizes(g, demand.size(), psi.size(), "reduce_lists");
    ReducedInstance out;
    out.lists.resize(idx(g.size()));
    out.demand.resize(idx(g.size()));
    for (VertexId v = 0; v < g.size(); ++v) {
        const ColorSet p = psi[idx(v)];
        if (!p.subset_of(lists[idx(v)]))
            throw PreconditionError("psi(" + std::to_string(v) + ") is not contained in L(" + std::to_string(v) + ")");
        if (p.size() > demand[idx(v)])
            throw PreconditionError("|psi(" + std::to_string(v) + ")| exceeds f(" + std::to_string(v) + ")");
        ColorSet removed = p;
        for (VertexId u : g.neighbors(v)) {
            if (psi[idx(u)].intersects(p))
                throw PreconditionError("psi conflicts on edge " + std::to_string(v) + "-" + std::to_string(u));
            removed |= psi[idx(u)];
        }
        out.lists[idx(v)] = lists[idx(v)] - removed;
        out.demand[idx(v)] = demand[idx(v)] - p.size();
    }
    return out;
}

std::optional<int> greedy_violation(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                                    std::span<const VertexId> order) {
    std::vector<int> rank(idx(g.size()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank[idx(order[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const VertexId v = order[i];
        int need = demand[idx(v)];
        for (VertexId u : g.neighbors(v))
            if (rank[idx(u)] >= 0 && rank[idx(u)] < static_cast<int>(i)) need += demand[idx(u)];
        if (lists[idx(v)].size() < need) return static_cast<int>(i);
    }
    return std::nullopt;
}

SetColoring greedy_color(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                         std::span<const VertexId> order) {
    check_sizes(g, lists.size(), demand.size(), "greedy_color");
    std::vector<char> seen(idx(g.size()), 0);
    for (VertexId v : order) {
        if (v < 0 || v >= g.size() || seen[idx(v)]) throw PreconditionError("greedy order is not a permutation");
        seen[idx(v)] = 1;
    }
    if (order.size() != idx(g.size())) throw PreconditionError("greedy order is not a permutation");
    if (auto bad = greedy_violation(g, lists, demand, order))
        throw GreedyPreconditionError(*bad, "greedy inequality fails at position " + std::to_string(*bad) +
                                                " (vertex " + std::to_string(order[idx(*bad)]) + ")");
    SetColoring phi(idx(g.size()));
    std::vector<char> done(idx(g.size()), 0);
    for (VertexId v : order) {
        ColorSet avail = lists[idx(v)];
        for (VertexId u : g.neighbors(v))
            if (done[idx(u)]) avail -= phi[idx(u)];
        phi[idx(v)] = avail.lowest(demand[idx(v)]);
        done[idx(v)] = 1;
    }
    return phi;
}

SetColoring combine(std::span<const ColorSet> phi, std::span<const ColorSet> psi) {
    SetColoring out(phi.begin(), phi.end());
    for (std::size_t i = 0; i < out.size() && i < psi.size(); ++i) out[i] |= psi[i];
    return out;
}

}  // namespace setcolor
