// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Corpora are generated on the
// first run and cached as planar_code files under --cache-dir.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "helpers.hpp"
#include "workbench/coloring.hpp"
#include "workbench/corpus.hpp"
#include "workbench/discharging.hpp"
#include "workbench/plane_graph.hpp"
#include "workbench/structure.hpp"

using namespace wb;

namespace {

int g_jobs = 2;
std::string g_cache_dir = "acceptance-cache";

// --- corpus plumbing --------------------------------------------------------

std::vector<std::string> split_planar_code_records(const std::string& data) {
    std::vector<std::string> records;
    size_t pos = 0;
    if (data.rfind(">>planar_code<<", 0) == 0) pos = 15;
    while (pos < data.size()) {
        size_t start = pos;
        int n = static_cast<unsigned char>(data[pos++]);
        if (n == 0) throw ParseError("corrupt cached corpus");
        for (int v = 0; v < n; ++v) {
            while (pos < data.size() && data[pos] != '\0') ++pos;
            ++pos;
        }
        if (pos > data.size()) throw ParseError("truncated cached corpus");
        records.push_back(data.substr(start, pos - start));
    }
    return records;
}

std::vector<std::string> load_or_generate(const std::string& name,
                                          const std::function<void(std::ostream&)>& generate) {
    std::filesystem::create_directories(g_cache_dir);
    std::filesystem::path path = std::filesystem::path(g_cache_dir) / name;
    if (!std::filesystem::exists(path)) {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            out << ">>planar_code<<";
            generate(out);
        }
        std::filesystem::rename(tmp, path);
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return split_planar_code_records(buf.str());
}

std::vector<std::string> corpus_full9() {
    return load_or_generate("full_n9.pc", [](std::ostream& out) {
        generate_connected_plane_graphs(9, false,
                                        [&](const PlaneGraph& g) { emit_planar_code(out, g); });
    });
}

std::vector<std::string> corpus_class12() {
    return load_or_generate("class_n12.pc", [](std::ostream& out) {
        generate_connected_plane_graphs(12, true,
                                        [&](const PlaneGraph& g) { emit_planar_code(out, g); });
    });
}

std::vector<std::string> corpus_random10() {
    return load_or_generate("random_n10.pc", [](std::ostream& out) {
        std::mt19937_64 rng(20260810);
        std::set<std::string> seen;
        int emitted = 0;
        while (emitted < 1500) {
            auto g = random_plane_graph(10, rng, false);
            if (!g) continue;
            if (!seen.insert(canonical_code(*g)).second) continue;
            emit_planar_code(out, *g);
            ++emitted;
        }
    });
}

std::vector<std::string> corpus_class_random_13_14() {
    return load_or_generate("class_random_n13_n14.pc", [](std::ostream& out) {
        std::mt19937_64 rng(31337);
        for (int n : {13, 14}) {
            std::set<std::string> seen;
            int emitted = 0;
            while (emitted < 250) {
                auto g = random_plane_graph(n, rng, true);
                if (!g) continue;
                if (!seen.insert(canonical_code(*g)).second) continue;
                emit_planar_code(out, *g);
                ++emitted;
            }
        }
    });
}

// --- parallel driver ---------------------------------------------------------

struct Failures {
    std::mutex mu;
    long long count = 0;
    std::vector<std::string> samples;

    void add(const std::string& what) {
        std::lock_guard<std::mutex> lock(mu);
        ++count;
        if (samples.size() < 5) samples.push_back(what);
    }
};

void for_each_graph(const std::vector<std::string>& blobs,
                    const std::function<void(const PlaneGraph&, size_t)>& fn, Failures& fails) {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= blobs.size()) return;
            try {
                PlaneGraph g = parse_planar_code(blobs[i])[0];
                fn(g, i);
            } catch (const Error& e) {
                fails.add("graph " + std::to_string(i) + ": " + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < g_jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

// --- criterion 1: exact conservation and the outer balance identity ---------

CriterionResult criterion_conservation() {
    Failures fails;
    std::atomic<long long> graphs{0}, outers{0};

    auto audit_graph = [&](const PlaneGraph& g, size_t idx) {
        int deg_sum = 0;
        for (const Face& f : g.faces()) deg_sum += f.degree();
        if (deg_sum != 2 * g.m() || g.n() - g.m() + g.face_count() != 2) {
            fails.add("Euler/dart-sum violation at graph " + std::to_string(idx));
            return;
        }
        ++graphs;
        for (const Face& f : g.faces()) {
            int d = f.degree();
            if (d != 3 && d != 5 && d != 6) continue;
            if (static_cast<int>(f.vertices.size()) != d) continue;  // not a cycle
            if (d == 6 && classify_6cycle(g, f.walk) == SixCycleKind::bad) continue;
            PlaneGraph h = g.with_outer_face(f.id);
            StructureIndex ix = build_structure_index(h);
            ChargeLedger led = apply_rules(h, ix);
            ++outers;
            if (led.sum_final() != Charge(0)) {
                fails.add("conservation broke: graph " + std::to_string(idx) + " face " +
                          std::to_string(f.id));
                continue;
            }
            try {
                outer_audit(h, led, ix);
            } catch (const AuditMismatchError& e) {
                fails.add("audit mismatch: graph " + std::to_string(idx) + " face " +
                          std::to_string(f.id) + ": " + e.what());
            }
        }
    };

    for (const auto& corpus : {corpus_full9(), corpus_random10()}) for_each_graph(corpus, audit_graph, fails);
    // the exhaustive class corpus extends outer-audit coverage to n = 10..12
    {
        auto cls = corpus_class12();
        std::vector<std::string> large;
        for (const auto& blob : cls)
            if (static_cast<unsigned char>(blob[0]) >= 10) large.push_back(blob);
        for_each_graph(large, audit_graph, fails);
    }

    CriterionResult r;
    r.pass = fails.count == 0;
    std::ostringstream d;
    d << "graphs=" << graphs.load() << " outers=" << outers.load();
    if (!r.pass) d << " failures=" << fails.count << " e.g. " << fails.samples.front();
    r.detail = d.str();
    return r;
}

// --- criterion 2: face-balance regressions -----------------------------------

CriterionResult criterion_face_balance() {
    struct Case {
        const char* name;
        PlaneGraph g;
        std::vector<int> signature;
        std::vector<std::pair<std::string, std::string>> expect;  // (rule, amount), sorted
    };
    std::vector<Case> cases;
    cases.push_back({"(3,3,4)", wbtest::face334_fixture(), {3, 3, 4},
                     {{"R1a", "2"}, {"R2b", "1/2"}, {"R2b", "1/2"}}});
    cases.push_back({"(3,3,5)", wbtest::face335_fixture(), {3, 3, 5},
                     {{"R2b", "5/8"}, {"R2b", "5/8"}, {"R2c", "7/4"}}});
    cases.push_back({"(3,4,4)", wbtest::face344_fixture(), {3, 4, 4},
                     {{"R1a", "5/4"}, {"R1a", "5/4"}, {"R2b", "1/2"}}});
    cases.push_back({"(3,3,3)", wbtest::face333_fixture(), {3, 3, 3},
                     {{"R2b", "1"}, {"R2b", "1"}, {"R2b", "1"}}});

    for (Case& c : cases) {
        PlaneGraph g = c.g.with_outer(wbtest::hexagon_outer());
        StructureIndex ix = build_structure_index(g);
        ChargeLedger led = apply_rules(g, ix);
        int face = -1;
        for (int f = 0; f < g.face_count(); ++f)
            if (ix.internal_face[f] && ix.signature[f] == c.signature) face = f;
        if (face < 0) return {false, std::string(c.name) + ": fixture lacks the face"};
        std::vector<std::pair<std::string, std::string>> in;
        for (const Transfer& t : led.transfers())
            if (t.to == Element::face(face)) in.emplace_back(to_string(t.rule), t.amount.str());
        std::sort(in.begin(), in.end());
        if (in != c.expect) return {false, std::string(c.name) + ": wrong transfer set"};
        if (led.final_of(Element::face(face)) != Charge(0))
            return {false, std::string(c.name) + ": final charge nonzero"};
    }
    return {true, "4 fixtures, exact sums"};
}

// --- criterion 3: Theorem 2 at desk scale -------------------------------------

CriterionResult criterion_theorem2() {
    Failures fails;
    std::atomic<long long> solved{0};
    auto check = [&](const PlaneGraph& g, size_t idx) {
        SolveResult r = solve(g, spec_200());
        if (!r.sat) {
            fails.add("class graph " + std::to_string(idx) + " UNSAT under (2,0,0)");
            return;
        }
        if (!verify(g, spec_200(), r.coloring).valid) {
            fails.add("invalid coloring emitted at graph " + std::to_string(idx));
            return;
        }
        ++solved;
    };
    for_each_graph(corpus_class12(), check, fails);
    for_each_graph(corpus_class_random_13_14(), check, fails);

    CriterionResult r;
    r.pass = fails.count == 0;
    std::ostringstream d;
    d << "class graphs=" << solved.load() << " (exhaustive to n=12, sampled 13-14)";
    if (!r.pass) d << " failures=" << fails.count << " e.g. " << fails.samples.front();
    r.detail = d.str();
    return r;
}

// --- criterion 4: Theorem 3 at desk scale -------------------------------------

CriterionResult criterion_theorem3() {
    std::vector<std::string> small;
    for (const auto& blob : corpus_class12())
        if (static_cast<unsigned char>(blob[0]) <= 11) small.push_back(blob);

    Failures fails;
    std::atomic<long long> cycles_checked{0}, precolorings{0};
    auto check = [&](const PlaneGraph& g, size_t idx) {
        for (const auto& cyc : enumerate_cycles(g, 6)) {
            size_t len = cyc.size();
            if (len == 4) continue;
            if (len == 6 && classify_6cycle(g, cyc) == SixCycleKind::bad) continue;
            auto verdict = is_superextendable(g, cyc);
            ++cycles_checked;
            precolorings += verdict.precolorings;
            if (!verdict.superextendable)
                fails.add("graph " + std::to_string(idx) + ": cycle of length " +
                          std::to_string(len) + " not superextendable");
        }
    };
    for_each_graph(small, check, fails);

    CriterionResult r;
    r.pass = fails.count == 0;
    std::ostringstream d;
    d << "class graphs n<=11: " << small.size() << ", cycles=" << cycles_checked.load()
      << ", precolorings=" << precolorings.load();
    if (!r.pass) d << " failures=" << fails.count << " e.g. " << fails.samples.front();
    r.detail = d.str();
    return r;
}

// --- criterion 5: the Figure-2 counterexample ----------------------------------

CriterionResult criterion_figure2() {
    PlaneGraph g = wbtest::b9();
    auto outer = wbtest::b9_outer_hexagon();
    Coloring pre = Coloring::empty(9);
    for (int v : {1, 3, 5}) pre.assignment[v] = 1;  // degree-3 cycle vertices get color 1
    for (int v : {2, 4, 6}) pre.assignment[v] = 2;
    SolveResult r = superextend(g, outer, pre);
    if (r.sat) return {false, "paper precoloring unexpectedly superextends"};

    // independent re-verification of the UNSAT claim by exhaustion
    for (const Coloring& col : enumerate_all(g, spec_200())) {
        bool extends = true;
        for (int v = 1; v <= 6; ++v)
            if (col.color(v) != pre.color(v)) extends = false;
        if (extends && satisfies_superextension(g, outer, col))
            return {false, "oracle found a superextension the solver missed"};
    }

    auto verdict = is_superextendable(g, outer);
    if (verdict.superextendable) return {false, "bad 6-cycle reported superextendable"};
    const Coloring& w = *verdict.failing_precoloring;
    if (w.color(1) != 1 || w.color(3) != 1 || w.color(5) != 1)
        return {false, "witness is not in the matched-vertices-color-1 family"};
    return {true, "UNSAT, re-verified by exhaustion over all (2,0,0)-colorings"};
}

// --- criterion 6: solver-oracle equivalence ------------------------------------

CriterionResult criterion_solver_oracle() {
    std::vector<std::string> small;
    for (const auto& blob : corpus_full9())
        if (static_cast<unsigned char>(blob[0]) <= 8) small.push_back(blob);

    const std::vector<ColorSpec> specs = {ColorSpec{0, 0, 0}, ColorSpec{1, 0, 0}, spec_200(),
                                          ColorSpec{2, 2, 2}};
    Failures fails;
    std::atomic<long long> checks{0};
    auto check = [&](const PlaneGraph& g, size_t idx) {
        bool prev_sat = false;
        for (size_t s = 0; s < specs.size(); ++s) {
            SolveResult r = solve(g, specs[s]);
            bool any = !enumerate_all(g, specs[s]).empty();
            ++checks;
            if (r.sat != any) {
                fails.add("solver/oracle disagree at graph " + std::to_string(idx) + " spec " +
                          std::to_string(s));
                return;
            }
            if (s > 0 && prev_sat && !r.sat) {
                fails.add("monotonicity broke at graph " + std::to_string(idx));
                return;
            }
            prev_sat = r.sat;
            if (s == 3 && !r.sat) {
                fails.add("planar graph " + std::to_string(idx) + " not (2,2,2)-colorable");
                return;
            }
        }
    };
    for_each_graph(small, check, fails);

    CriterionResult r;
    r.pass = fails.count == 0;
    std::ostringstream d;
    d << "graphs n<=8: " << small.size() << ", spec checks=" << checks.load();
    if (!r.pass) d << " failures=" << fails.count << " e.g. " << fails.samples.front();
    r.detail = d.str();
    return r;
}

// --- criterion 7: lemma oracles and the recoloring property suite --------------

CriterionResult criterion_lemma_oracles() {
    if (!lemma_colorability_oracle(LemmaGadget::L1,
                                   wbtest::l1_gadget().with_outer({1, 2, 3, 4, 5})))
        return {false, "L1 gadget oracle returned false"};
    if (!lemma_colorability_oracle(LemmaGadget::L2,
                                   wbtest::l2_gadget().with_outer(wbtest::hexagon_outer())))
        return {false, "L2 gadget oracle returned false"};
    if (!lemma_colorability_oracle(LemmaGadget::L7,
                                   wbtest::l7_gadget().with_outer(wbtest::hexagon_outer())))
        return {false, "L7 gadget oracle returned false"};

    // Lemma 2.4 property: when neither blocking condition holds, color 1 is
    // reachable through the permitted cascade.
    std::vector<PlaneGraph> pool;
    for (const auto& blob : corpus_full9()) {
        int n = static_cast<unsigned char>(blob[0]);
        if (n < 7 || n > 9) continue;
        PlaneGraph g = parse_planar_code(blob)[0];
        for (const Face& f : g.faces()) {
            int d = f.degree();
            if ((d == 3 || d == 5 || d == 6) && static_cast<int>(f.vertices.size()) == d &&
                !(d == 6 && classify_6cycle(g, f.walk) == SixCycleKind::bad)) {
                PlaneGraph h = g.with_outer_face(f.id);
                bool candidate = false;
                for (int v = 1; v <= h.n() && !candidate; ++v) {
                    if (h.on_outer(v)) continue;
                    int internal_nbrs = 0;
                    bool touches_c = false;
                    for (int u : h.neighbors(v)) {
                        if (h.on_outer(u)) touches_c = true;
                        else ++internal_nbrs;
                    }
                    if (!touches_c && internal_nbrs >= 2) candidate = true;
                }
                if (candidate) pool.push_back(std::move(h));
                break;
            }
        }
        if (pool.size() >= 4000) break;
    }
    if (pool.empty()) return {false, "no candidate graphs for the recoloring suite"};

    std::mt19937_64 rng(97);
    long long samples = 0, guaranteed = 0, feasible_checks = 0;
    const long long kTarget = 10000;
    while (samples < kTarget) {
        const PlaneGraph& g = pool[rng() % pool.size()];
        // pick an internal vertex with two internal neighbors and no
        // colored neighbor besides them
        std::vector<int> candidates;
        for (int v = 1; v <= g.n(); ++v) {
            if (g.on_outer(v)) continue;
            int internal_nbrs = 0;
            bool touches_c = false;
            for (int u : g.neighbors(v)) {
                if (g.on_outer(u)) touches_c = true;
                else ++internal_nbrs;
            }
            if (!touches_c && internal_nbrs >= 2) candidates.push_back(v);
        }
        if (candidates.empty()) continue;
        int v = candidates[rng() % candidates.size()];
        std::vector<int> internals;
        for (int u : g.neighbors(v))
            if (!g.on_outer(u)) internals.push_back(u);
        int v1 = internals[rng() % internals.size()];
        int v2 = v1;
        while (v2 == v1) v2 = internals[rng() % internals.size()];

        Coloring col = Coloring::empty(g.n());
        for (int w : g.outer().vertices) col.assignment[w] = 1 + static_cast<int>(rng() % 3);
        col.assignment[v1] = 1 + static_cast<int>(rng() % 3);
        col.assignment[v2] = 1 + static_cast<int>(rng() % 3);
        if (!valid_partial(g, spec_200(), col)) continue;
        if (!satisfies_superextension(g, g.outer().vertices, col)) continue;
        ++samples;

        bool adjacent = g.adjacent(v1, v2);
        int d1 = g.degree(v1), d2 = g.degree(v2);
        bool cond1 = adjacent && d1 + d2 >= 9;
        bool cond2 = !adjacent && (d1 >= 5 || d2 >= 5);
        if (cond1 || cond2) continue;
        ++guaranteed;
        ++feasible_checks;
        if (!recolor_with_one_feasible(g, col, v))
            return {false, "Lemma 2.4 guarantee failed on a generated partial coloring"};
    }
    std::ostringstream d;
    d << "3 gadget oracles true; " << samples << " partial colorings, " << guaranteed
      << " in the guarantee region, all feasible";
    (void)feasible_checks;
    return {true, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    g_jobs = std::max(2u, std::thread::hardware_concurrency());
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc) g_jobs = std::atoi(argv[++i]);
        if (arg == "--cache-dir" && i + 1 < argc) g_cache_dir = argv[++i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    struct Entry {
        int id;
        const char* name;
        std::function<CriterionResult()> fn;
    };
    const std::vector<Entry> entries = {
        {1, "exact charge conservation + outer balance audit", criterion_conservation},
        {2, "face-balance regressions", criterion_face_balance},
        {3, "Theorem 2: class graphs are (2,0,0)-colorable", criterion_theorem2},
        {4, "Theorem 3: triangles/5-cycles/good 6-cycles superextend", criterion_theorem3},
        {5, "Figure-2 counterexample is not superextendable", criterion_figure2},
        {6, "solver-oracle equivalence + (2,2,2)", criterion_solver_oracle},
        {7, "lemma oracles + recoloring property suite", criterion_lemma_oracles},
    };

    bool all_pass = true;
    for (const Entry& e : entries) {
        if (only && e.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = e.fn();
        } catch (const std::exception& ex) {
            r = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%d] %-55s %s (%s; %.1fs)\n", e.id, e.name, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES");
    return all_pass ? 0 : 1;
}
