#pragma once

// Text formats. One record per line, '#' starts a comment, blank lines are skipped.
//   <id>: <nbr> <nbr> ...     rotation of vertex id (clockwise)
//   Z: <id> <id> ...          precolored clique
//   Lz <id>: c c c            fixed colors of a precolored vertex
//   L <id>: c c ...           list
//   f <id>: k                 demand (default 3)
//   phi <id>: c c c           coloring
// Any record kind may appear in any file; readers pick the records they need.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setcolor/coloring.hpp"
#include "setcolor/plane_graph.hpp"

namespace setcolor {

/// Malformed input; the message starts with "<source>:<line>: ".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

template <typename T>
struct Record {
    VertexId vertex;
    T value;
    int line;
};

struct Document {
    std::vector<std::vector<VertexId>> rotation;  ///< empty when no vertex lines were given
    std::vector<VertexId> z;
    int z_line = 0;
    std::vector<Record<ColorSet>> z_colors;
    std::vector<Record<ColorSet>> lists;
    std::vector<Record<int>> demands;
    std::vector<Record<ColorSet>> phi;
};

Document parse_document(std::istream& in, const std::string& source = "<input>");
Document read_document(const std::string& path);

struct GraphInput {
    PlaneGraph graph;
    std::optional<PrecoloredClique> z;
};

/// Builds and validates the plane graph and precolored clique of a document.
/// Throws ParseError (line 0) for missing vertex lines, GraphError for invalid graphs.
GraphInput graph_from_document(const Document& doc, const std::string& source = "<input>");

/// Lists for all n vertices; every vertex needs an L line, except precolored vertices,
/// which take their Lz colors. Throws ParseError otherwise.
ListAssignment lists_from_document(const Document& doc, int n, const std::optional<PrecoloredClique>& z,
                                   const std::string& source = "<input>");
/// Demands for n vertices, 3 where no f line is given.
Demand demands_from_document(const Document& doc, int n, const std::string& source = "<input>");
/// Coloring for n vertices; every vertex needs a phi line.
SetColoring coloring_from_document(const Document& doc, int n, const std::string& source = "<input>");

std::string format_graph(const PlaneGraph& g, const std::optional<PrecoloredClique>& z = std::nullopt);
std::string format_lists(std::span<const ColorSet> lists, std::span<const int> demand = {});
std::string format_coloring(std::span<const ColorSet> phi);

}  // namespace setcolor
