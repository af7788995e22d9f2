#include "setcolor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct LineReader {
    const std::string& source;
    int line;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source, line, what); }

    long number(const std::string& tok, const char* what) const {
        long value = 0;
        const auto* end = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(tok.data(), end, value);
        if (ec != std::errc{} || p != end) fail(std::string("expected ") + what + ", got '" + tok + "'");
        return value;
    }

    VertexId vertex(const std::string& tok) const {
        const long v = number(tok, "a vertex id");
        if (v < 0 || v > 1'000'000) fail("vertex id " + tok + " out of range");
        return static_cast<VertexId>(v);
    }

    ColorSet colors(const std::vector<std::string>& toks, std::size_t from) const {
        ColorSet s;
        for (std::size_t i = from; i < toks.size(); ++i) {
            const long c = number(toks[i], "a color");
            if (c < 1 || c > ColorSet::kMaxColor) fail("color " + toks[i] + " outside 1..64");
            if (s.contains(static_cast<int>(c))) fail("color " + toks[i] + " repeated");
            s.insert(static_cast<int>(c));
        }
        return s;
    }
};

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

Document parse_document(std::istream& in, const std::string& source) {
    Document doc;
    std::map<VertexId, std::vector<VertexId>> rot;
    std::map<VertexId, int> vertex_line;
    bool saw_z = false;
    std::string raw;
    for (int line = 1; std::getline(in, raw); ++line) {
        const LineReader r{source, line};
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        // split "<head>: <rest>"
        const auto colon = raw.find(':');
        std::vector<std::string> all = tokens(raw);
        // summary lines written by the CLI carry no data
        if (all.empty() || all[0] == "RESULT") continue;
        if (colon == std::string::npos) r.fail("missing ':'");
        const std::vector<std::string> head = tokens(raw.substr(0, colon));
        const std::vector<std::string> rest = tokens(raw.substr(colon + 1));

        if (head.size() == 1 && head[0] == "Z") {
            if (saw_z) r.fail("second Z line");
            saw_z = true;
            doc.z_line = line;
            for (const auto& t : rest) doc.z.push_back(r.vertex(t));
        } else if (head.size() == 1) {
            const VertexId v = r.vertex(head[0]);
            if (vertex_line.count(v)) r.fail("vertex " + head[0] + " already defined on line " +
                                             std::to_string(vertex_line[v]));
            vertex_line[v] = line;
            auto& nb = rot[v];
            for (const auto& t : rest) nb.push_back(r.vertex(t));
        } else if (head.size() == 2) {
            const VertexId v = r.vertex(head[1]);
            if (head[0] == "Lz") {
                doc.z_colors.push_back({v, r.colors(rest, 0), line});
            } else if (head[0] == "L") {
                doc.lists.push_back({v, r.colors(rest, 0), line});
            } else if (head[0] == "phi") {
                doc.phi.push_back({v, r.colors(rest, 0), line});
            } else if (head[0] == "f") {
                if (rest.size() != 1) r.fail("demand line needs exactly one value");
                const long k = r.number(rest[0], "a demand");
                if (k < 0 || k > ColorSet::kMaxColor) r.fail("demand out of range");
                doc.demands.push_back({v, static_cast<int>(k), line});
            } else {
                r.fail("unknown record '" + head[0] + "'");
            }
        } else {
            r.fail("cannot parse record head");
        }
    }
    if (!rot.empty()) {
        const int n = static_cast<int>(rot.size());
        for (const auto& [v, nb] : rot) {
            if (v >= n) throw ParseError(source, vertex_line[v], "vertex ids must be 0.." + std::to_string(n - 1));
            for (VertexId u : nb)
                if (u >= n) throw ParseError(source, vertex_line[v], "neighbor " + std::to_string(u) + " is not a vertex");
        }
        for (auto& [v, nb] : rot) doc.rotation.push_back(std::move(nb));
    }
    return doc;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_document(in, path);
}

GraphInput graph_from_document(const Document& doc, const std::string& source) {
    if (doc.rotation.empty()) throw ParseError(source, 0, "no vertex lines");
    GraphInput out;
    out.graph = PlaneGraph::build(doc.rotation);
    if (!doc.z.empty()) {
        PrecoloredClique z;
        for (VertexId v : doc.z) {
            const auto it = std::find_if(doc.z_colors.begin(), doc.z_colors.end(),
                                         [&](const auto& p) { return p.vertex == v; });
            if (it == doc.z_colors.end())
                throw ParseError(source, doc.z_line, "no Lz line for precolored vertex " + std::to_string(v));
            z.vertices.push_back(v);
            z.colors.push_back(it->value);
        }
        z.validate(out.graph.graph());
        out.z = std::move(z);
    } else if (!doc.z_colors.empty()) {
        throw ParseError(source, doc.z_colors.front().line, "Lz line without a Z line");
    }
    return out;
}

ListAssignment lists_from_document(const Document& doc, int n, const std::optional<PrecoloredClique>& z,
                                   const std::string& source) {
    ListAssignment lists(idx(n));
    std::vector<char> have(idx(n), 0);
    if (z)
        for (std::size_t i = 0; i < z->vertices.size(); ++i) {
            lists[idx(z->vertices[i])] = z->colors[i];
            have[idx(z->vertices[i])] = 1;
        }
    for (const auto& [v, s, line] : doc.lists) {
        if (v >= n) throw ParseError(source, line, "list for unknown vertex " + std::to_string(v));
        if (z && z->contains(v)) throw ParseError(source, line, "L line for precolored vertex " + std::to_string(v));
        if (have[idx(v)]) throw ParseError(source, line, "second list for vertex " + std::to_string(v));
        lists[idx(v)] = s;
        have[idx(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!have[idx(v)]) throw ParseError(source, 0, "no list for vertex " + std::to_string(v));
    return lists;
}

Demand demands_from_document(const Document& doc, int n, const std::string& source) {
    Demand d = uniform_demand(n, 3);
    for (const auto& [v, k, line] : doc.demands) {
        if (v >= n) throw ParseError(source, line, "demand for unknown vertex " + std::to_string(v));
        d[idx(v)] = k;
    }
    return d;
}

SetColoring coloring_from_document(const Document& doc, int n, const std::string& source) {
    SetColoring phi(idx(n));
    std::vector<char> have(idx(n), 0);
    for (const auto& [v, s, line] : doc.phi) {
        if (v >= n) throw ParseError(source, line, "coloring of unknown vertex " + std::to_string(v));
        if (have[idx(v)]) throw ParseError(source, line, "second coloring line for vertex " + std::to_string(v));
        phi[idx(v)] = s;
        have[idx(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!have[idx(v)]) throw ParseError(source, 0, "no phi line for vertex " + std::to_string(v));
    return phi;
}

namespace {

void colors_line(std::ostream& os, ColorSet s) {
    for (int c : s.colors()) os << ' ' << c;
    os << '\n';
}

}  // namespace

std::string format_graph(const PlaneGraph& g, const std::optional<PrecoloredClique>& z) {
    std::ostringstream os;
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << v << ':';
        for (VertexId u : g.rotation(v)) os << ' ' << u;
        os << '\n';
    }
    if (z) {
        os << "Z:";
        for (VertexId v : z->vertices) os << ' ' << v;
        os << '\n';
        for (std::size_t i = 0; i < z->vertices.size(); ++i) {
            os << "Lz " << z->vertices[i] << ':';
            colors_line(os, z->colors[i]);
        }
    }
    return os.str();
}

std::string format_lists(std::span<const ColorSet> lists, std::span<const int> demand) {
    std::ostringstream os;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        os << "L " << v << ':';
        colors_line(os, lists[v]);
    }
    for (std::size_t v = 0; v < demand.size(); ++v)
        if (demand[v] != 3) os << "f " << v << ": " << demand[v] << '\n';
    return os.str();
}

std::string format_coloring(std::span<const ColorSet> phi) {
    std::ostringstream os;
    for (std::size_t v = 0; v < phi.size(); ++v) {
        os << "phi " << v << ':';
        colors_line(os, phi[v]);
    }
    return os.str();
}

}  // namespace setcolor
