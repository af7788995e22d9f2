// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any fails.
//   acceptance [--criterion N]...

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "setcolor/discharging.hpp"
#include "setcolor/hall.hpp"
#include "setcolor/reducer.hpp"
#include "setcolor/solver.hpp"
#include "setcolor/sweep.hpp"
#include "setcolor/venn.hpp"
#include "support.hpp"

using namespace setcolor;
using testsupport::at;

namespace {

struct Verdict9 {
    bool pass = true;
    std::string detail;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double x) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << x;
    return os.str();
}

Verdict9 charge_conservation() {
    const Clock clock;
    const auto corpus = testsupport::discharge_corpus();
    int bad = 0;
    for (const auto& named : corpus) {
        const DischargeResult r = apply_rules(named.graph, {});
        if (r.initial.total() != HalfInt::whole(-12) || r.final_state.total() != HalfInt::whole(-12)) ++bad;
    }
    const double t = clock.seconds();
    return {bad == 0 && corpus.size() >= 20 && t < 1.0,
            "graphs=" + std::to_string(corpus.size()) + " off_total=" + std::to_string(bad) + " time=" + fixed(t) + "s"};
}

Verdict9 exhaustive_gadgets() {
    Verdict9 v;
    for (Lemma l : {Lemma::P3, Lemma::P4, Lemma::Triangle, Lemma::Claw3, Lemma::Lollipop}) {
        const SweepResult r = exhaustive_sweep(l, Exec::Parallel);
        v.pass = v.pass && r.ok() && r.passed > 0;
        v.detail += std::string(lemma_name(l)) + ":" + std::to_string(r.passed) + "/" + std::to_string(r.violations) + " ";
    }
    v.detail += "(passed/violations)";
    return v;
}

Verdict9 random_gadgets() {
    Verdict9 v;
    long long total = 0;
    int lemmas = 0;
    for (Lemma l : all_lemmas()) {
        if (supports_exhaustive(l)) continue;
        const SweepResult r = random_sweep(l, 10000, 20240611, Exec::Parallel);
        ++lemmas;
        total += r.passed;
        if (!r.ok() || r.passed < 10000) {
            v.pass = false;
            v.detail += std::string(lemma_name(l)) + " violations=" + std::to_string(r.violations) + " ";
        }
    }
    v.detail += "lemmas=" + std::to_string(lemmas) + " instances=" + std::to_string(total);
    return v;
}

Verdict9 hall_exactness() {
    const SweepResult sweep = triangle_hall_sweep(5, Exec::Parallel);
    const Graph k3 = Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {0, 2}});
    struct Witness {
        std::array<ColorSet, 3> lists;
        HallFailure expect;
    };
    // each violates exactly one condition: a short list, a small pair union, a small triple union
    const Witness witnesses[] = {
        {{ColorSet{1, 2}, ColorSet::range(3, 8), ColorSet::range(9, 14)}, HallFailure::Single},
        {{ColorSet::range(1, 5), ColorSet::range(1, 5), ColorSet::range(6, 12)}, HallFailure::Pair},
        {{ColorSet::range(1, 6), ColorSet::range(3, 8), ColorSet{1, 2, 3, 6, 7, 8}}, HallFailure::Triple},
    };
    int unsat = 0;
    for (const auto& w : witnesses) {
        const ListAssignment l(w.lists.begin(), w.lists.end());
        const TriangleResult t = triangle_colorable(w.lists);
        if (!t.colorable() && t.certificate.failure == w.expect && !solve(k3, l, uniform_demand(3, 3)) &&
            !testsupport::naive_colorable(k3, l, uniform_demand(3, 3)))
            ++unsat;
    }
    return {sweep.ok() && unsat == 3, "patterns=" + std::to_string(sweep.total()) + " disagreements=" +
                                          std::to_string(sweep.violations) + " unsat_witnesses=" + std::to_string(unsat) + "/3"};
}

Verdict9 solver_completeness() {
    const Clock clock;
    long long cases = 0, disagreements = 0;
    // n <= 4: every graph, every demand vector in {1,2,3}^n, every Venn pattern on <= 6 colors
    for (int n = 1; n <= 4; ++n) {
        const auto graphs = testsupport::graphs_up_to_iso(n);
        std::vector<Demand> demands;
        Demand f(at(n), 1);
        while (true) {
            demands.push_back(f);
            int i = 0;
            while (i < n && f[at(i)] == 3) f[at(i++)] = 1;
            if (i == n) break;
            ++f[at(i)];
        }
        const SweepResult r = run_sweep(static_cast<long long>(graphs.size() * demands.size()), Exec::Parallel,
                                        [&](long long task, SweepResult& acc) {
                                            const Graph& g = graphs[at(static_cast<int>(task) / static_cast<int>(demands.size()))];
                                            const Demand& d = demands[at(static_cast<int>(task) % static_cast<int>(demands.size()))];
                                            for_each_cell_vector_bounded(n, 6, [&](const CellVector& cells) {
                                                const ListAssignment l = lists_from_cells(n, cells);
                                                if (solve(g, l, d).has_value() == testsupport::naive_colorable(g, l, d))
                                                    ++acc.passed;
                                                else
                                                    acc.record_violation(task, "");
                                            });
                                        });
        cases += r.passed + r.violations;
        disagreements += r.violations;
    }
    // n = 5: every graph, uniform demand 1, 2 or 3, every Venn pattern on <= 6 colors
    const auto graphs5 = testsupport::graphs_up_to_iso(5);
    const SweepResult r5 = run_sweep(static_cast<long long>(graphs5.size() * 3), Exec::Parallel,
                                     [&](long long task, SweepResult& acc) {
                                         const Graph& g = graphs5[at(static_cast<int>(task / 3))];
                                         const Demand d = uniform_demand(5, static_cast<int>(task % 3) + 1);
                                         for_each_cell_vector_bounded(5, 6, [&](const CellVector& cells) {
                                             const ListAssignment l = lists_from_cells(5, cells);
                                             if (solve(g, l, d).has_value() == testsupport::naive_colorable(g, l, d))
                                                 ++acc.passed;
                                             else
                                                 acc.record_violation(task, "");
                                         });
                                     });
    cases += r5.passed + r5.violations;
    disagreements += r5.violations;
    return {disagreements == 0, "cases=" + std::to_string(cases) + " disagreements=" + std::to_string(disagreements) +
                                    " time=" + fixed(clock.seconds()) + "s"};
}

struct EndToEnd {
    int instances = 0;
    int failures = 0;
    int invalid = 0;
    int ratio_checked = 0;
    int ratio_short = 0;
    double seconds = 0;
};

EndToEnd run_end_to_end() {
    const Clock clock;
    EndToEnd e;
    const auto corpus = testsupport::e2e_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const PlaneGraph& g = corpus[i].graph;
        const int n = g.vertex_count();
        // random 11-subsets of 1..33, and the common list 1..11
        for (int family = 0; family < 2; ++family) {
            const ListAssignment lists =
                family == 0 ? random_lists(n, 7000 + i) : ListAssignment(at(n), ColorSet::range(1, 11));
            const ReduceOutcome r = reduce_and_extend(g, lists, {});
            ++e.instances;
            if (!r.ok) {
                ++e.failures;
                std::cerr << corpus[i].name << ":\n" << r.failure;
                continue;
            }
            if (!check_coloring(g.graph(), lists, uniform_demand(n, 3), r.coloring)) ++e.invalid;
            if (family == 1) {
                ++e.ratio_checked;
                const IndependentSet s = independence_ratio(g.graph(), r.coloring);
                if (static_cast<long>(s.vertices.size()) < (3L * n + 10) / 11) ++e.ratio_short;
            }
        }
    }
    e.seconds = clock.seconds();
    return e;
}

Verdict9 r6_identity() {
    int runs = 0, checks = 0, failures = 0, excluded = 0;
    std::vector<testsupport::Named> all = testsupport::discharge_corpus();
    for (auto& g : testsupport::e2e_corpus()) all.push_back(std::move(g));
    for (const auto& named : all) {
        // K3 is the one class graph whose two 3-faces share an edge; the identity counts each
        // 3-face at v once per flanking 6+-face and has nothing to count there
        if (named.graph.vertex_count() == 3 && named.graph.edge_count() == 3) {
            ++excluded;
            continue;
        }
        // without Z, and with a single precolored vertex so some 6+-vertices occur
        for (const std::vector<VertexId>& z : {std::vector<VertexId>{}, std::vector<VertexId>{0}}) {
            const DischargeResult r = apply_rules(named.graph, z);
            ++runs;
            checks += static_cast<int>(r.r6_checks.size());
            failures += static_cast<int>(r.r6_violations().size());
        }
    }
    return {failures == 0 && checks > 0, "runs=" + std::to_string(runs) + " vertices_checked=" + std::to_string(checks) +
                                             " failures=" + std::to_string(failures) + " excluded_K3=" + std::to_string(excluded)};
}

Verdict9 reduction_fixtures() {
    int passing = 0;
    std::string detail;
    for (const auto& f : testsupport::config_fixtures()) {
        bool ok = in_class(f.host.graph());
        const auto c = testsupport::fixture_config(f);
        ok = ok && c && check_configuration(f.host.graph(), {}, *c).empty();
        for (std::uint64_t seed = 0; ok && seed < 100; ++seed) {
            const ListAssignment lists = random_lists(f.host.vertex_count(), 31 * seed + 5);
            const ReduceOutcome r = reduce_with(f.host, lists, {}, *c);
            ok = r.ok && check_coloring(f.host.graph(), lists, uniform_demand(f.host.vertex_count(), 3), r.coloring);
        }
        passing += ok;
        if (!ok) detail += std::string(config_name(f.kind)) + " failed ";
    }
    return {passing == 9, detail + "fixtures=" + std::to_string(passing) + "/9"};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only.insert(std::atoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    const auto wanted = [&](int k) { return only.empty() || only.count(k) > 0; };

    bool all = true;
    const auto report = [&](int k, const char* name, const Verdict9& v) {
        std::cout << "CRITERION " << k << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << name << ": " << v.detail
                  << std::endl;
        all = all && v.pass;
    };

    if (wanted(1)) report(1, "charge conservation", charge_conservation());
    if (wanted(2)) report(2, "gadget soundness, exhaustive", exhaustive_gadgets());
    if (wanted(3)) report(3, "gadget soundness, randomized", random_gadgets());
    if (wanted(4)) report(4, "Hall condition exactness", hall_exactness());
    if (wanted(5)) report(5, "solver completeness", solver_completeness());
    if (wanted(6) || wanted(7)) {
        const EndToEnd e = run_end_to_end();
        if (wanted(6))
            report(6, "end-to-end choosability",
                   {e.instances >= 50 && e.failures == 0 && e.invalid == 0 && e.seconds < 60,
                    "instances=" + std::to_string(e.instances) + " failures=" + std::to_string(e.failures) +
                        " invalid=" + std::to_string(e.invalid) + " time=" + fixed(e.seconds) + "s"});
        if (wanted(7))
            report(7, "independence ratio",
                   {e.ratio_checked > 0 && e.ratio_short == 0 && e.failures == 0,
                    "instances=" + std::to_string(e.ratio_checked) + " below_ceil(3n/11)=" + std::to_string(e.ratio_short)});
    }
    if (wanted(8)) report(8, "R6 bookkeeping identity", r6_identity());
    if (wanted(9)) report(9, "reduction correctness", reduction_fixtures());
    return all ? 0 : 1;
}
