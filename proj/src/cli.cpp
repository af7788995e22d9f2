#include "setcolor/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "setcolor/discharging.hpp"
#include "setcolor/generators.hpp"
#include "setcolor/io.hpp"
#include "setcolor/reducer.hpp"
#include "setcolor/sweep.hpp"

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Loaded {
    Document doc;
    GraphInput in;
    std::vector<VertexId> z;
};

Loaded load_graph(const std::string& path) {
    Loaded l;
    l.doc = read_document(path);
    l.in = graph_from_document(l.doc, path);
    if (l.in.z) l.z = l.in.z->vertices;
    return l;
}

// Lists from --lists, else from L lines of the graph file, else random 11-subsets of {1..33}.
ListAssignment lists_for(const Loaded& g, const std::string& lists_path, std::uint64_t seed, std::ostream& out) {
    const int n = g.in.graph.vertex_count();
    if (!lists_path.empty()) return lists_from_document(read_document(lists_path), n, g.in.z, lists_path);
    if (!g.doc.lists.empty()) return lists_from_document(g.doc, n, g.in.z, "graph file");
    out << "# random lists: 11 of 1..33, seed " << seed << '\n';
    ListAssignment lists = random_lists(n, seed);
    if (g.in.z)
        for (std::size_t i = 0; i < g.z.size(); ++i) lists[idx(g.z[i])] = g.in.z->colors[i];
    return lists;
}

int solve_verb(const std::string& graph, const std::string& lists_path, std::uint64_t seed, std::ostream& out) {
    const Loaded g = load_graph(graph);
    const ListAssignment lists = lists_for(g, lists_path, seed, out);
    const ReduceOutcome r = reduce_and_extend(g.in.graph, lists, g.z);
    const int n = g.in.graph.vertex_count();
    if (!r.ok) {
        out << r.failure;
        out << "RESULT status=fail n=" << n << " alpha=0\n";
        return 1;
    }
    out << format_coloring(r.coloring);
    const IndependentSet s = independence_ratio(g.in.graph.graph(), r.coloring);
    out << "RESULT status=ok n=" << n << " alpha=" << s.vertices.size() << '\n';
    return 0;
}

int verify_verb(const std::string& graph, const std::string& phi_path, const std::string& lists_path,
                std::ostream& out) {
    const Loaded g = load_graph(graph);
    const int n = g.in.graph.vertex_count();
    const Document phi_doc = read_document(phi_path);
    const SetColoring phi = coloring_from_document(phi_doc, n, phi_path);
    Demand demand = demands_from_document(g.doc, n, graph);
    for (const auto& d : phi_doc.demands) demand[idx(d.vertex)] = d.value;

    std::optional<ListAssignment> lists;
    if (!lists_path.empty()) {
        const Document ld = read_document(lists_path);
        lists = lists_from_document(ld, n, g.in.z, lists_path);
        for (const auto& d : ld.demands) demand[idx(d.vertex)] = d.value;
    } else if (!g.doc.lists.empty()) {
        lists = lists_from_document(g.doc, n, g.in.z, graph);
    } else if (!phi_doc.lists.empty()) {
        lists = lists_from_document(phi_doc, n, g.in.z, phi_path);
    }
    const Verdict v = lists ? check_coloring(g.in.graph.graph(), *lists, demand, phi)
                            : check_set_coloring(g.in.graph.graph(), demand, phi);
    if (v) {
        out << "VALID\n";
        out << "RESULT status=ok n=" << n << '\n';
        return 0;
    }
    out << "INVALID " << v.violation << '\n';
    out << "RESULT status=fail n=" << n << '\n';
    return 1;
}

int discharge_verb(const std::string& graph, bool ledger, std::ostream& out) {
    const Loaded g = load_graph(graph);
    const DischargeResult r = apply_rules(g.in.graph, g.z);
    if (ledger)
        for (const auto& t : r.final_state.transfers) out << t.ledger_line() << '\n';
    out << charge_table(g.in.graph, r);
    return 0;
}

int audit_verb(const std::string& graph, std::ostream& out) {
    const Loaded g = load_graph(graph);
    const AuditReport rep = audit(g.in.graph, g.z);
    out << rep.text;
    out << "RESULT status=ok negative_vertices=" << rep.negative_vertices.size()
        << " negative_faces=" << rep.negative_faces.size() << " negative_segments=" << rep.negative_segments.size()
        << " r6_failures=" << rep.result.r6_violations().size() << '\n';
    return 0;
}

int find_verb(const std::string& graph, bool all, std::ostream& out) {
    const Loaded g = load_graph(graph);
    if (all) {
        int total = 0;
        for (ConfigKind k : kAllConfigKinds) {
            const auto found = find_all(g.in.graph, g.z, k);
            total += static_cast<int>(found.size());
            for (const auto& c : found) out << c.describe() << '\n';
        }
        out << "RESULT status=ok count=" << total << '\n';
        return 0;
    }
    const auto c = find_configuration(g.in.graph, g.z);
    if (c) out << c->describe() << '\n';
    else out << "NONE\n";
    out << "RESULT status=ok config=" << (c ? std::string(config_name(c->kind)) : std::string("NONE")) << '\n';
    return 0;
}

int ratio_verb(const std::string& graph, const std::string& phi_path, std::ostream& out) {
    const Loaded g = load_graph(graph);
    const int n = g.in.graph.vertex_count();
    SetColoring phi;
    if (!phi_path.empty()) {
        phi = coloring_from_document(read_document(phi_path), n, phi_path);
    } else {
        // every list is {1..11}, so some color class holds at least 3n/11 vertices
        ListAssignment lists(idx(n), ColorSet::range(1, 11));
        if (g.in.z)
            for (std::size_t i = 0; i < g.z.size(); ++i) lists[idx(g.z[i])] = g.in.z->colors[i];
        const ReduceOutcome r = reduce_and_extend(g.in.graph, lists, g.z);
        if (!r.ok) {
            out << r.failure << "RESULT status=fail n=" << n << " alpha=0\n";
            return 1;
        }
        phi = r.coloring;
    }
    const IndependentSet s = independence_ratio(g.in.graph.graph(), phi);
    out << "color " << s.color << ':';
    for (VertexId v : s.vertices) out << ' ' << v;
    out << '\n';
    const long need = (3L * n + 10) / 11;
    const bool ok = static_cast<long>(s.vertices.size()) >= need;
    out << "RESULT status=" << (ok ? "ok" : "fail") << " n=" << n << " alpha=" << s.vertices.size() << '\n';
    return ok ? 0 : 1;
}

int lemma_verb(const std::string& name, bool exhaustive, long long count, std::uint64_t seed, bool serial,
               std::ostream& out) {
    std::vector<Lemma> lemmas;
    if (name == "all") {
        lemmas = all_lemmas();
    } else if (const auto l = lemma_from_name(name)) {
        lemmas = {*l};
    } else {
        throw std::invalid_argument("unknown lemma '" + name + "'");
    }
    const Exec exec = serial ? Exec::Serial : Exec::Parallel;
    bool ok = true;
    for (Lemma l : lemmas) {
        const bool exh = exhaustive && supports_exhaustive(l);
        if (exhaustive && !exh && name != "all")
            throw std::invalid_argument(std::string(lemma_name(l)) + " has no exhaustive sweep; use --random");
        const SweepResult r = exh ? exhaustive_sweep(l, exec) : random_sweep(l, count, seed, exec);
        out << "lemma=" << lemma_name(l) << " mode=" << (exh ? "exhaustive" : "random");
        if (!exh) out << " seed=" << seed;
        out << " passed=" << r.passed << " excluded=" << r.excluded << " violations=" << r.violations << '\n';
        if (!r.ok()) out << "# first counterexample (case " << r.first_violation << ")\n" << r.counterexample;
        ok = ok && r.ok();
    }
    out << "RESULT status=" << (ok ? "ok" : "fail") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Set coloring of plane graphs without 4- and 5-cycles", "setcolor"};
    app.require_subcommand(1);

    std::string graph, phi, lists;
    std::uint64_t seed = 1;
    bool ledger = false, all = false, exhaustive = false, serial = false;
    long long count = 10000;
    std::string lemma;

    auto* solve = app.add_subcommand("solve", "(L:3)-color a graph by reduction");
    solve->add_option("graph", graph, "graph file")->required();
    solve->add_option("--lists", lists, "list file (default: random 11-lists)");
    solve->add_option("--seed", seed, "seed for random lists");

    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("graph", graph, "graph file")->required();
    verify->add_option("phi", phi, "coloring file")->required();
    verify->add_option("--lists", lists, "list file");

    auto* discharge = app.add_subcommand("discharge", "apply the discharging rules");
    discharge->add_option("graph", graph, "graph file")->required();
    discharge->add_flag("--ledger", ledger, "print XFER lines");

    auto* aud = app.add_subcommand("audit", "final charges with explanations of negative entries");
    aud->add_option("graph", graph, "graph file")->required();

    auto* check = app.add_subcommand("check-lemma", "sweep a gadget construction");
    check->add_option("name", lemma, "lemma name or 'all'")->required();
    auto* exh_flag = check->add_flag("--exhaustive", exhaustive, "all Venn-cell patterns");
    auto* rnd = check->add_option("--random", count, "number of random instances");
    check->add_option("--seed", seed, "seed for random instances");
    check->add_flag("--serial", serial, "run the serial reference loop");
    exh_flag->excludes(rnd);

    auto* find = app.add_subcommand("find-reducible", "find a reducible configuration");
    find->add_option("graph", graph, "graph file")->required();
    find->add_flag("--all", all, "list every configuration");

    auto* ratio = app.add_subcommand("independence-ratio", "largest color class of an (11:3)-coloring");
    ratio->add_option("graph", graph, "graph file")->required();
    ratio->add_option("--phi", phi, "use this coloring instead of computing one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return solve_verb(graph, lists, seed, out);
        if (verify->parsed()) return verify_verb(graph, phi, lists, out);
        if (discharge->parsed()) return discharge_verb(graph, ledger, out);
        if (aud->parsed()) return audit_verb(graph, out);
        if (check->parsed()) return lemma_verb(lemma, exhaustive, count, seed, serial, out);
        if (find->parsed()) return find_verb(graph, all, out);
        if (ratio->parsed()) return ratio_verb(graph, phi, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace setcolor
