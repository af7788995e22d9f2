#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "setcolor/color_set.hpp"
#include "setcolor/graph.hpp"

namespace setcolor {

/// L(v) per vertex.
using ListAssignment = std::vector<ColorSet>;
/// f(v) per vertex.
using Demand = std::vector<int>;
/// phi(v) per vertex.
using SetColoring = std::vector<ColorSet>;

inline Demand uniform_demand(int n, int k) { return Demand(static_cast<std::size_t>(n), k); }

/// Raised when an operation's precondition on lists, demands or partial colorings fails.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Verdict {
    bool ok = true;
    std::string violation;   ///< empty when ok
    VertexId vertex = -1;    ///< offending vertex (first endpoint for edge conflicts)
    VertexId other = -1;     ///< second endpoint for edge conflicts
    explicit operator bool() const { return ok; }
};

/// Checks phi(v) subset of L(v), |phi(v)| = f(v) and disjointness along every edge;
/// reports the first violation in vertex order.
Verdict check_coloring(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                       std::span<const ColorSet> phi);

/// Same, without the list containment check (used when no lists are known).
Verdict check_set_coloring(const Graph& g, std::span<const int> demand, std::span<const ColorSet> phi);

struct ReducedInstance {
    ListAssignment lists;
    Demand demand;
};

/// Removes a partial coloring psi: L'(v) = L(v) minus psi(v) and the psi-colors of
/// neighbors, f'(v) = f(v) - |psi(v)|. Any (L':f')-coloring united with psi is an
/// (L:f)-coloring. Throws PreconditionError when psi is not a conflict-free L-set
/// coloring with |psi(v)| <= f(v).
ReducedInstance reduce_lists(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                             std::span<const ColorSet> psi);

/// Raised by greedy_color when |L(v_i)| < f(v_i) + sum of f over earlier neighbors.
class GreedyPreconditionError : public PreconditionError {
public:
    GreedyPreconditionError(int index, const std::string& what) : PreconditionError(what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// First position i of `order` where the greedy inequality fails, if any.
std::optional<int> greedy_violation(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                                    std::span<const VertexId> order);

/// Colors the vertices greedily in `order`, each with the lowest f(v) colors of its
/// list not used by earlier neighbors. `order` must be a permutation of the vertices.
SetColoring greedy_color(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                         std::span<const VertexId> order);

/// Union of phi and psi vertex by vertex.
SetColoring combine(std::span<const ColorSet> phi, std::span<const ColorSet> psi);

}  // namespace setcolor
