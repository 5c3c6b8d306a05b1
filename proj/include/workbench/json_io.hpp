#pragma once

#include <string>

#include <json.hpp>

#include "workbench/coloring.hpp"
#include "workbench/discharging.hpp"
#include "workbench/structure.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

inline Json coloring_to_json(const Coloring& col) {
    Json arr = Json::array();
    for (int v = 1; v < static_cast<int>(col.assignment.size()); ++v)
        if (col.colored(v)) arr.push_back(Json{{"vertex", v}, {"color", col.color(v)}});
    return arr;
}

inline Json solve_result_to_json(const SolveResult& r) {
    if (!r.sat) return Json{{"status", "unsat"}, {"nodes", r.nodes}};
    return Json{{"status", "sat"}, {"coloring", coloring_to_json(r.coloring)}, {"nodes", r.nodes}};
}

inline Json class_verdict_to_json(const ClassVerdict& v) {
    Json j{{"in_class", v.in_class}};
    j["triangle_distance"] =
        v.triangle_dist == kInfiniteDistance ? Json("inf") : Json(v.triangle_dist);
    if (v.four_cycle) j["four_cycle"] = *v.four_cycle;
    if (v.close_triangles)
        j["close_triangles"] = Json{{"first", v.close_triangles->first},
                                    {"second", v.close_triangles->second}};
    return j;
}

inline Json ledger_to_json(const ChargeLedger& led) {
    Json initial = Json::array(), final_ = Json::array(), transfers = Json::array();
    for (int s = 0; s < led.element_count(); ++s) {
        Element e = led.element(s);
        initial.push_back(Json{{"element", e.str()}, {"charge", led.initial_of(e).str()}});
        final_.push_back(Json{{"element", e.str()}, {"charge", led.final_of(e).str()}});
    }
    for (const Transfer& t : led.transfers())
        transfers.push_back(Json{{"from", t.from.str()},
                                 {"to", t.to.str()},
                                 {"amount", t.amount.str()},
                                 {"rule", to_string(t.rule)}});
    return Json{{"initial", initial},
                {"transfers", transfers},
                {"final", final_},
                {"sum", led.sum_final().str()}};
}

inline Json audit_to_json(const OuterAudit& a) {
    return Json{{"r", a.r},           {"e_cut", a.e_cut}, {"chords", a.chords},
                {"f3_count", a.f3_count}, {"f5_count", a.f5_count}, {"t3", a.t3},
                {"t5", a.t5},         {"a", a.a},         {"mu_star_C", a.mu_star_c.str()}};
}

inline Json findings_to_json(const std::vector<Finding>& findings) {
    Json arr = Json::array();
    for (const Finding& f : findings)
        arr.push_back(Json{{"lemma", f.lemma},
                           {"vertices", f.vertices},
                           {"faces", f.faces},
                           {"note", f.note}});
    return arr;
}

inline Json structure_index_to_json(const PlaneGraph& g, const StructureIndex& ix) {
    Json vertices = Json::array();
    for (int v = 1; v <= ix.n; ++v) {
        vertices.push_back(Json{{"id", v},
                                {"degree", ix.degree[v]},
                                {"on_outer", static_cast<bool>(ix.on_outer[v])},
                                {"triangular", static_cast<bool>(ix.triangular[v])},
                                {"special", static_cast<bool>(ix.special[v])},
                                {"potentially_special", static_cast<bool>(ix.potentially_special[v])},
                                {"good_4plus", static_cast<bool>(ix.good4plus[v])}});
    }
    Json faces = Json::array();
    for (int f = 0; f < ix.face_count; ++f) {
        faces.push_back(Json{{"id", f},
                             {"walk", g.face(f).walk},
                             {"signature", ix.signature[f]},
                             {"internal", static_cast<bool>(ix.internal_face[f])},
                             {"class", to_string(ix.fclass[f])},
                             {"rich", static_cast<bool>(ix.rich[f])}});
    }
    Json pendants = Json::array();
    for (const PendantIncidence& p : ix.pendant_incidences)
        pendants.push_back(Json{{"v", p.v}, {"x", p.x}, {"face", p.face}});
    Json special_pairs = Json::array();
    for (auto [x, f] : ix.pendant_special_pairs)
        special_pairs.push_back(Json{{"x", x}, {"face", f}});
    return Json{{"vertices", vertices},
                {"faces", faces},
                {"pendant_incidences", pendants},
                {"pendant_special_pairs", special_pairs}};
}

}  // namespace wb
