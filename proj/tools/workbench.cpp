// Batch driver and report emitter for the plane-graph coloring workbench.
//
// Commands: check-class, color, superextend, discharge, scan-configs, batch.
// Exit codes: 0 success/property holds, 1 UNSAT/violation, 2 parse error,
// 3 precondition error.

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "workbench/coloring.hpp"
#include "workbench/corpus.hpp"
#include "workbench/discharging.hpp"
#include "workbench/json_io.hpp"
#include "workbench/plane_graph.hpp"
#include "workbench/structure.hpp"

namespace {

using wb::Json;

enum ExitCode { kOk = 0, kUnsat = 1, kParseError = 2, kPrecondition = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wb::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string detect_format(const std::string& path, const std::string& explicit_format) {
    if (!explicit_format.empty()) return explicit_format;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".rot") return "rot";
    return "planar_code";
}

std::vector<wb::PlaneGraph> load_graphs(const std::string& path, const std::string& format) {
    std::string data = read_file(path);
    if (detect_format(path, format) == "rot") return {wb::parse_rotation_text(data)};
    return wb::parse_planar_code(data);
}

wb::PlaneGraph load_single_graph(const std::string& path, const std::string& format) {
    auto graphs = load_graphs(path, format);
    if (graphs.size() != 1)
        throw wb::PreconditionError("expected exactly one graph, got " +
                                    std::to_string(graphs.size()));
    return std::move(graphs[0]);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw wb::PreconditionError("empty vertex list");
    return out;
}

wb::ColorSpec parse_spec(const std::string& text) {
    auto caps = parse_vertex_list(text);
    return wb::ColorSpec(caps);
}

// "v=c,v=c" pairs onto a coloring sized for g.
wb::Coloring parse_assignment(const std::string& text, int n) {
    wb::Coloring col = wb::Coloring::empty(n);
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw wb::PreconditionError("expected v=c pair: " + tok);
        int v = std::stoi(tok.substr(0, eq));
        int c = std::stoi(tok.substr(eq + 1));
        if (v < 1 || v > n) throw wb::PreconditionError("vertex out of range: " + tok);
        col.assignment[v] = c;
    }
    return col;
}

void emit(const Json& j, const std::string& format) {
    if (format == "text") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const wb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const wb::InvariantError& e) {
        std::cerr << "invalid graph: " << e.what() << "\n";
        return kParseError;
    } catch (const wb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

// ---------------------------------------------------------------------------

int cmd_check_class(const std::vector<std::string>& inputs, const std::string& format,
                    const std::string& out_format) {
    bool all_in = true;
    Json reports = Json::array();
    for (const std::string& path : inputs) {
        auto graphs = load_graphs(path, format);
        for (size_t i = 0; i < graphs.size(); ++i) {
            auto verdict = wb::is_class_member(graphs[i]);
            Json rec = wb::class_verdict_to_json(verdict);
            rec["input"] = path;
            rec["index"] = i;
            rec["n"] = graphs[i].n();
            reports.push_back(std::move(rec));
            all_in = all_in && verdict.in_class;
        }
    }
    emit(Json{{"graphs", reports}}, out_format);
    return all_in ? kOk : kUnsat;
}

int cmd_color(const std::string& input, const std::string& format, const std::string& spec_text,
              const std::string& partial_text, bool symmetry, const std::string& out_format) {
    wb::PlaneGraph g = load_single_graph(input, format);
    wb::ColorSpec spec = parse_spec(spec_text);
    wb::Coloring partial =
        partial_text.empty() ? wb::Coloring::empty(g.n()) : parse_assignment(partial_text, g.n());
    wb::SolveOptions opt;
    opt.symmetry_reduction = symmetry;
    wb::SolveResult r = wb::solve(g, spec, partial, opt);
    if (r.sat && !wb::verify(g, spec, r.coloring).valid)
        throw wb::InvariantError("solver emitted an invalid coloring");
    emit(wb::solve_result_to_json(r), out_format);
    return r.sat ? kOk : kUnsat;
}

int cmd_superextend(const std::string& input, const std::string& format,
                    const std::string& outer_text, const std::string& precolor_text,
                    bool all_precolorings, const std::string& out_format) {
    wb::PlaneGraph g = load_single_graph(input, format);
    std::vector<int> cycle = parse_vertex_list(outer_text);
    if (!wb::is_cycle_of(g, cycle)) throw wb::PreconditionError("--outer is not a cycle of the graph");
    if (all_precolorings) {
        auto verdict = wb::is_superextendable(g, cycle);
        Json j{{"superextendable", verdict.superextendable},
               {"precolorings", verdict.precolorings}};
        if (verdict.failing_precoloring)
            j["failing_precoloring"] = wb::coloring_to_json(*verdict.failing_precoloring);
        emit(j, out_format);
        return verdict.superextendable ? kOk : kUnsat;
    }
    if (precolor_text.empty())
        throw wb::PreconditionError("superextend needs --precolor or --all-precolorings");
    wb::Coloring pre = parse_assignment(precolor_text, g.n());
    wb::SolveResult r = wb::superextend(g, cycle, pre);
    if (r.sat && !wb::satisfies_superextension(g, cycle, r.coloring))
        throw wb::InvariantError("solver emitted a non-superextension");
    emit(wb::solve_result_to_json(r), out_format);
    return r.sat ? kOk : kUnsat;
}

int cmd_discharge(const std::string& input, const std::string& format,
                  const std::string& outer_text, bool literal_five, bool emit_index,
                  const std::string& out_format) {
    wb::PlaneGraph g0 = load_single_graph(input, format);
    wb::PlaneGraph g = g0.with_outer(parse_vertex_list(outer_text));
    wb::StructureIndex ix = wb::build_structure_index(g);
    wb::DischargeOptions opt;
    opt.literal_five = literal_five;
    wb::ChargeLedger led = wb::apply_rules(g, ix, opt);
    wb::OuterAudit audit = wb::outer_audit(g, led, ix);  // throws on mismatch
    Json j{{"ledger", wb::ledger_to_json(led)}, {"audit", wb::audit_to_json(audit)}};
    if (emit_index) j["index"] = wb::structure_index_to_json(g, ix);
    bool ok = led.sum_final() == wb::Charge(0);
    j["conservation"] = ok;
    emit(j, out_format);
    return ok ? kOk : kUnsat;
}

int cmd_scan_configs(const std::string& input, const std::string& format,
                     const std::string& outer_text, const std::string& out_format) {
    wb::PlaneGraph g = load_single_graph(input, format).with_outer(parse_vertex_list(outer_text));
    auto findings = wb::scan_reducible_configurations(g, wb::build_structure_index(g));
    emit(Json{{"findings", wb::findings_to_json(findings)}, {"count", findings.size()}},
         out_format);
    return kOk;
}

// ---------------------------------------------------------------------------
// batch: one JSONL record per corpus graph, deterministic input order, with
// per-graph error/timeout capture and optional fan-out across workers.

struct BatchConfig {
    int jobs = 1;
    int limit_n = 10;  // bound for superextension and enumeration work
    int timeout_ms = 0;
    bool literal_five = false;
};

Json batch_record(const wb::PlaneGraph& g, size_t index, const BatchConfig& cfg) {
    Json rec{{"index", index}, {"n", g.n()}, {"m", g.m()}};
    wb::SolveOptions sopt;
    if (cfg.timeout_ms > 0)
        sopt.deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.timeout_ms);
    std::vector<std::string> violations;

    auto verdict = wb::is_class_member(g);
    rec["in_class"] = verdict.in_class;

    wb::SolveResult r200 = wb::solve(g, wb::spec_200(), sopt);
    rec["color_200"] = r200.sat ? "sat" : "unsat";
    if (r200.sat && !wb::verify(g, wb::spec_200(), r200.coloring).valid)
        violations.push_back("solver emitted invalid (2,0,0)-coloring");
    if (verdict.in_class && !r200.sat) violations.push_back("class graph not (2,0,0)-colorable");

    wb::SolveResult r222 = wb::solve(g, wb::ColorSpec{2, 2, 2}, sopt);
    rec["color_222"] = r222.sat ? "sat" : "unsat";
    if (!r222.sat) violations.push_back("planar graph not (2,2,2)-colorable");

    if (g.n() <= cfg.limit_n) {
        int checked = 0, failures = 0;
        Json fail = Json::array();
        for (const auto& cyc : wb::enumerate_cycles(g, 6)) {
            size_t len = cyc.size();
            if (len == 4) continue;
            if (len == 6 && wb::classify_6cycle(g, cyc) == wb::SixCycleKind::bad) continue;
            auto sv = wb::is_superextendable(g, cyc, sopt);
            ++checked;
            if (!sv.superextendable) {
                ++failures;
                if (fail.size() < 5)
                    fail.push_back(Json{
                        {"cycle", cyc},
                        {"precoloring", wb::coloring_to_json(*sv.failing_precoloring)}});
                if (verdict.in_class)
                    violations.push_back("class graph with non-superextendable cycle");
            }
        }
        rec["superextension"] =
            Json{{"cycles_checked", checked}, {"failures", failures}, {"witnesses", fail}};
    } else {
        rec["superextension"] = Json{{"skipped", "n exceeds --limit-n"}};
    }

    int outers = 0;
    bool audits_ok = true;
    wb::DischargeOptions dopt;
    dopt.literal_five = cfg.literal_five;
    for (const wb::Face& f : g.faces()) {
        int d = f.degree();
        if (d != 3 && d != 5 && d != 6) continue;
        if (static_cast<int>(f.vertices.size()) != d) continue;  // repeated boundary vertex
        if (d == 6 && wb::classify_6cycle(g, f.walk) == wb::SixCycleKind::bad) continue;
        wb::PlaneGraph h = g.with_outer_face(f.id);
        wb::StructureIndex ix = wb::build_structure_index(h);
        wb::ChargeLedger led = wb::apply_rules(h, ix, dopt);
        ++outers;
        try {
            wb::outer_audit(h, led, ix);
        } catch (const wb::AuditMismatchError&) {
            audits_ok = false;
            violations.push_back("outer audit mismatch on face " + std::to_string(f.id));
        }
        if (led.sum_final() != wb::Charge(0)) {
            audits_ok = false;
            violations.push_back("conservation failure on face " + std::to_string(f.id));
        }
    }
    rec["discharge"] = Json{{"outers_tried", outers}, {"audits_ok", audits_ok}};

    if (!violations.empty()) rec["violations"] = violations;
    return rec;
}

int cmd_batch(const std::string& input, const std::string& format, const BatchConfig& cfg) {
    std::vector<wb::PlaneGraph> graphs = load_graphs(input, format);
    std::vector<std::string> lines(graphs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> violated{false};

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            Json rec;
            try {
                rec = batch_record(graphs[i], i, cfg);
                if (rec.contains("violations")) violated = true;
            } catch (const wb::TimeoutError&) {
                rec = Json{{"index", i}, {"n", graphs[i].n()}, {"status", "timeout"}};
            } catch (const wb::Error& e) {
                rec = Json{{"index", i}, {"n", graphs[i].n()}, {"error", e.what()}};
            }
            lines[i] = rec.dump();
        }
    };
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const std::string& l : lines) std::cout << l << "\n";
    return violated ? kUnsat : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph (2,0,0)-coloring and discharging workbench"};
    app.require_subcommand(1);

    std::string input, format, out_format = "json";
    std::vector<std::string> inputs;
    std::string spec_text = "2,0,0", partial_text, outer_text, precolor_text;
    bool symmetry = false, all_precolorings = false, literal_five = false, emit_index = false;
    BatchConfig batch_cfg;

    auto add_common = [&](CLI::App* cmd, bool multi_input = false) {
        if (multi_input)
            cmd->add_option("inputs", inputs, "input graph files")->required();
        else
            cmd->add_option("input", input, "input graph file")->required();
        cmd->add_option("--input-format", format, "rot | planar_code (default: by extension)");
        cmd->add_option("--format", out_format, "json | text");
    };

    CLI::App* check = app.add_subcommand("check-class", "membership in the studied class");
    add_common(check, true);

    CLI::App* color = app.add_subcommand("color", "exact (c1,...,ck)-coloring search");
    add_common(color);
    color->add_option("--spec", spec_text, "impropriety caps, e.g. 2,0,0");
    color->add_option("--partial", partial_text, "fixed partial coloring v=c,...");
    color->add_flag("--symmetry-reduction", symmetry, "canonicalize colors of equal caps");

    CLI::App* super = app.add_subcommand("superextend", "superextension of a precolored cycle");
    add_common(super);
    super->add_option("--outer", outer_text, "cycle vertices v1,v2,...")->required();
    super->add_option("--precolor", precolor_text, "precoloring v=c,...");
    super->add_flag("--all-precolorings", all_precolorings,
                    "decide superextendability over every valid precoloring");

    CLI::App* discharge = app.add_subcommand("discharge", "run rules R1-R3 and audit the ledger");
    add_common(discharge);
    discharge->add_option("--outer", outer_text, "outer face cycle v1,v2,...")->required();
    discharge->add_flag("--literal-five", literal_five, "read R2a's three 5-vertices literally");
    discharge->add_flag("--emit-index", emit_index, "include the structure index report");

    CLI::App* scan = app.add_subcommand("scan-configs", "detect reducible configurations");
    add_common(scan);
    scan->add_option("--outer", outer_text, "outer face cycle v1,v2,...")->required();

    CLI::App* batch = app.add_subcommand("batch", "per-graph JSONL over a planar_code corpus");
    add_common(batch);
    batch->add_option("--jobs", batch_cfg.jobs, "worker threads");
    batch->add_option("--limit-n", batch_cfg.limit_n, "superextension bound on n");
    batch->add_option("--timeout-ms", batch_cfg.timeout_ms, "per-graph solve deadline");
    batch->add_flag("--literal-five", batch_cfg.literal_five, "literal R2a reading");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kPrecondition;
    }

    return guarded([&]() -> int {
        if (check->parsed()) return cmd_check_class(inputs, format, out_format);
        if (color->parsed())
            return cmd_color(input, format, spec_text, partial_text, symmetry, out_format);
        if (super->parsed())
            return cmd_superextend(input, format, outer_text, precolor_text, all_precolorings,
                                   out_format);
        if (discharge->parsed())
            return cmd_discharge(input, format, outer_text, literal_five, emit_index, out_format);
        if (scan->parsed()) return cmd_scan_configs(input, format, outer_text, out_format);
        if (batch->parsed()) return cmd_batch(input, format, batch_cfg);
        return kPrecondition;
    });
}
