#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "workbench/plane_graph.hpp"

namespace wb {

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Minimum over unordered pairs of distinct triangles of the shortest path
// length between their vertex sets; kInfiniteDistance when the graph has
// fewer than two triangles, 0 when two triangles share a vertex.
inline int triangle_distance(const PlaneGraph& g) {
    auto triangles = enumerate_cycles(g, 3);
    if (triangles.size() < 2) return kInfiniteDistance;
    int best = kInfiniteDistance;
    for (size_t i = 0; i + 1 < triangles.size(); ++i) {
        std::vector<int> dist(g.n() + 1, -1);
        std::queue<int> q;
        for (int v : triangles[i]) {
            dist[v] = 0;
            q.push(v);
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        for (size_t j = i + 1; j < triangles.size(); ++j)
            for (int v : triangles[j]) best = std::min(best, dist[v]);
    }
    return best;
}

struct ClassVerdict {
    bool in_class = false;
    int triangle_dist = kInfiniteDistance;
    std::optional<std::vector<int>> four_cycle;  // witness when a 4-cycle exists
    std::optional<std::pair<std::vector<int>, std::vector<int>>> close_triangles;
};

// Membership in the class of plane graphs with no 4-cycles and triangle
// distance at least 2.
inline ClassVerdict is_class_member(const PlaneGraph& g) {
    ClassVerdict v;
    for (const auto& c : enumerate_cycles(g, 4))
        if (c.size() == 4) {
            v.four_cycle = c;
            break;
        }
    v.triangle_dist = triangle_distance(g);
    if (v.triangle_dist < 2) {
        auto triangles = enumerate_cycles(g, 3);
        // recover a closest pair for the witness
        for (size_t i = 0; i + 1 < triangles.size() && !v.close_triangles; ++i) {
            std::vector<int> dist(g.n() + 1, -1);
            std::queue<int> q;
            for (int x : triangles[i]) {
                dist[x] = 0;
                q.push(x);
            }
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int u : g.neighbors(x))
                    if (dist[u] < 0) {
                        dist[u] = dist[x] + 1;
                        q.push(u);
                    }
            }
            for (size_t j = i + 1; j < triangles.size() && !v.close_triangles; ++j)
                for (int x : triangles[j])
                    if (dist[x] == v.triangle_dist)
                        v.close_triangles = std::make_pair(triangles[i], triangles[j]);
        }
    }
    v.in_class = !v.four_cycle && v.triangle_dist >= 2;
    return v;
}

enum class SixCycleKind { good, bad };

struct BadSixCycleWitness {
    std::vector<int> triangle;
    std::array<std::pair<int, int>, 3> matching;  // (cycle vertex, triangle vertex)
};

namespace detail {

// Perfect matching from the three cycle vertices `alt` onto triangle `tri`
// using edges of g. A disjoint triangle lies wholly inside one of the two
// disks bounded by the 6-cycle, and the matching edges lie with it, so no
// separate side-of-cycle test is needed.
inline std::optional<BadSixCycleWitness> match_alternating(const PlaneGraph& g,
                                                           const std::array<int, 3>& alt,
                                                           std::vector<int> tri) {
    std::sort(tri.begin(), tri.end());
    do {
        if (g.adjacent(alt[0], tri[0]) && g.adjacent(alt[1], tri[1]) &&
            g.adjacent(alt[2], tri[2])) {
            BadSixCycleWitness w;
            w.triangle = tri;
            w.matching = {std::make_pair(alt[0], tri[0]), std::make_pair(alt[1], tri[1]),
                          std::make_pair(alt[2], tri[2])};
            return w;
        }
    } while (std::next_permutation(tri.begin(), tri.end()));
    return std::nullopt;
}

}  // namespace detail

// Witness that the 6-cycle is bad: a disjoint triangle matched by edges to
// alternating cycle vertices.
inline std::optional<BadSixCycleWitness> find_bad_6cycle_matching(const PlaneGraph& g,
                                                                  const std::vector<int>& c) {
    if (c.size() != 6 || !is_cycle_of(g, c)) throw NotA6CycleError("not a 6-cycle of the graph");
    auto triangles = enumerate_cycles(g, 3);
    for (const auto& tri : triangles) {
        bool disjoint = true;
        for (int t : tri)
            if (std::find(c.begin(), c.end(), t) != c.end()) disjoint = false;
        if (!disjoint) continue;
        for (const auto& alt :
             {std::array<int, 3>{c[0], c[2], c[4]}, std::array<int, 3>{c[1], c[3], c[5]}}) {
            if (auto w = detail::match_alternating(g, alt, tri)) return w;
        }
    }
    return std::nullopt;
}

inline SixCycleKind classify_6cycle(const PlaneGraph& g, const std::vector<int>& c) {
    return find_bad_6cycle_matching(g, c) ? SixCycleKind::bad : SixCycleKind::good;
}

// True iff `tri` is the matched interior triangle of some bad 6-cycle.
inline bool is_interior_triangle_of_bad_6cycle(const PlaneGraph& g, const std::vector<int>& tri) {
    for (const auto& c : enumerate_cycles(g, 6)) {
        if (c.size() != 6) continue;
        bool disjoint = true;
        for (int t : tri)
            if (std::find(c.begin(), c.end(), t) != c.end()) disjoint = false;
        if (!disjoint) continue;
        for (const auto& alt :
             {std::array<int, 3>{c[0], c[2], c[4]}, std::array<int, 3>{c[1], c[3], c[5]}})
            if (detail::match_alternating(g, alt, tri)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Degree signatures and bounded-degree patterns.

inline std::vector<int> face_signature(const PlaneGraph& g, const Face& f) {
    std::vector<int> sig;
    for (int v : f.walk) sig.push_back(g.degree(v));
    std::sort(sig.begin(), sig.end());
    return sig;
}

// One slot of a degree pattern; bounds are inclusive, so 4- is {0,4} and
// 4+ is {4, kUnboundedDegree}.
struct DegreeBound {
    int lo = 0;
    int hi = std::numeric_limits<int>::max();

    static DegreeBound exactly(int d) { return {d, d}; }
    static DegreeBound at_most(int d) { return {0, d}; }
    static DegreeBound at_least(int d) { return {d, std::numeric_limits<int>::max()}; }
};

inline bool matches_signature(const std::vector<int>& sig, std::vector<DegreeBound> pattern) {
    if (sig.size() != pattern.size()) return false;
    std::vector<int> idx(pattern.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end());
    do {
        bool ok = true;
        for (size_t i = 0; i < sig.size() && ok; ++i) {
            const DegreeBound& b = pattern[idx[i]];
            ok = sig[i] >= b.lo && sig[i] <= b.hi;
        }
        if (ok) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

namespace sig {

inline bool is_333(const std::vector<int>& s) { return s == std::vector<int>{3, 3, 3}; }
inline bool is_334(const std::vector<int>& s) { return s == std::vector<int>{3, 3, 4}; }
inline bool is_335(const std::vector<int>& s) { return s == std::vector<int>{3, 3, 5}; }
inline bool is_344(const std::vector<int>& s) { return s == std::vector<int>{3, 4, 4}; }
// (3,3,5-)
inline bool is_335minus(const std::vector<int>& s) {
    return s.size() == 3 && s[0] == 3 && s[1] == 3 && s[2] <= 5;
}
// the pendant classes charged by R2b/R3b and counted by Lemmas 3.4-3.6
inline bool is_pendant_charged(const std::vector<int>& s) { return is_335minus(s) || is_344(s); }
// (3,5-,5)
inline bool is_35minus5(const std::vector<int>& s) {
    return s.size() == 3 && s[0] == 3 && s[2] == 5 && s[1] <= 5;
}

}  // namespace sig

// ---------------------------------------------------------------------------
// StructureIndex: the full per-vertex / per-face taxonomy used by the
// discharging engine and the configuration scanners.

enum class FClass { internal, f3_prime, f3_double_prime, f5_prime, f5_double_prime, outer, other };

inline std::string to_string(FClass c) {
    switch (c) {
        case FClass::internal: return "internal";
        case FClass::f3_prime: return "F3'";
        case FClass::f3_double_prime: return "F3''";
        case FClass::f5_prime: return "F5'";
        case FClass::f5_double_prime: return "F5''";
        case FClass::outer: return "outer";
        case FClass::other: return "other";
    }
    return "?";
}

// One attachment of an internal 3-face to an off-face vertex: x is a
// 3-vertex of face f and v is x's neighbor off f. Pendant charges fire once
// per incidence, not once per face.
struct PendantIncidence {
    int v = 0;     // pendant neighbor (the donor side)
    int x = 0;     // 3-vertex on the face
    int face = -1;
};

struct StructureIndex {
    int n = 0;
    int m = 0;
    int face_count = 0;
    int outer_face_id = -1;
    std::vector<int> outer_vertices;

    // per vertex, 1-based
    std::vector<int> degree;
    std::vector<char> on_outer;
    std::vector<char> triangular;
    std::vector<char> special;
    std::vector<char> potentially_special;
    std::vector<char> good5;
    std::vector<char> good4plus;
    std::vector<std::vector<int>> incident_faces;
    std::vector<std::vector<int>> pendant_3faces;  // per-vertex pendant internal 3-faces, by incidence

    // per face
    std::vector<std::vector<int>> signature;
    std::vector<char> internal_face;
    std::vector<FClass> fclass;
    std::vector<char> rich;

    std::vector<PendantIncidence> pendant_incidences;
    std::vector<std::pair<int, int>> pendant_special_pairs;  // (donor x, 5-face), deduplicated
};

// Populates the taxonomy for a graph with a designated outer cycle.
// Definitions, fixed once here and used uniformly:
//   internal face      = no vertex on C; internal vertex = not on C
//   special(v)         = 3-vertex on an internal 5-face with both face
//                        neighbors of degree <= 4
//   potentially special= internal 3-vertex with >= 2 internal 4-
//                        neighbors
//   pendant incidence  = (v, x, f): internal 3-face f, 3-vertex x on f,
//                        vx an edge, v off f
//   pendant special    = (x, f): f internal 5-face with a special vertex
//                        whose off-face neighbor x has degree >= 5 or lies
//                        on C
//   good 5-vertex      = has three rotation-consecutive neighbors, none
//                        special and none on a pendant (3,3,5-)/(3,4,4)-face
//                        of v; when v is triangular the triple must also
//                        avoid the neighbors sharing v's 3-face
//   good 4+            = internal nontriangular 4-vertex, good 5-vertex, or
//                        6+-vertex
//   rich 5-face        = internal 5-face with a good 4+-vertex and two or
//                        more other 5+-vertices
inline StructureIndex build_structure_index(const PlaneGraph& g) {
    if (!g.has_outer()) throw NoOuterCycleError("structure index requires a designated outer cycle");
    StructureIndex ix;
    ix.n = g.n();
    ix.m = g.m();
    ix.face_count = g.face_count();
    ix.outer_face_id = g.outer().face_id;
    ix.outer_vertices = g.outer().vertices;

    ix.degree.assign(g.n() + 1, 0);
    ix.on_outer.assign(g.n() + 1, 0);
    ix.triangular.assign(g.n() + 1, 0);
    ix.special.assign(g.n() + 1, 0);
    ix.potentially_special.assign(g.n() + 1, 0);
    ix.good5.assign(g.n() + 1, 0);
    ix.good4plus.assign(g.n() + 1, 0);
    ix.incident_faces.assign(g.n() + 1, {});
    ix.pendant_3faces.assign(g.n() + 1, {});

    for (int v = 1; v <= g.n(); ++v) {
        ix.degree[v] = g.degree(v);
        ix.on_outer[v] = g.on_outer(v) ? 1 : 0;
    }

    ix.signature.resize(g.face_count());
    ix.internal_face.assign(g.face_count(), 0);
    ix.fclass.assign(g.face_count(), FClass::other);
    ix.rich.assign(g.face_count(), 0);

    for (const Face& f : g.faces()) {
        ix.signature[f.id] = face_signature(g, f);
        int on_c = 0;
        for (int v : f.vertices)
            if (g.on_outer(v)) ++on_c;
        ix.internal_face[f.id] = (on_c == 0) ? 1 : 0;
        for (int v : f.vertices) {
            ix.incident_faces[v].push_back(f.id);
            if (f.degree() == 3) ix.triangular[v] = 1;
        }
        if (f.id == ix.outer_face_id)
            ix.fclass[f.id] = FClass::outer;
        else if (on_c == 0)
            ix.fclass[f.id] = FClass::internal;
        else if (f.degree() == 3)
            ix.fclass[f.id] = on_c == 1 ? FClass::f3_prime : FClass::f3_double_prime;
        else if (f.degree() == 5)
            ix.fclass[f.id] = on_c == 1 ? FClass::f5_prime : FClass::f5_double_prime;
        else
            ix.fclass[f.id] = FClass::other;
    }

    // special vertices, recorded per (vertex, face) for the pendant pairs
    std::vector<std::vector<int>> special_faces_of(g.n() + 1);
    for (const Face& f : g.faces()) {
        if (f.degree() != 5 || !ix.internal_face[f.id]) continue;
        int k = f.degree();
        for (int i = 0; i < k; ++i) {
            int v = f.walk[i];
            if (g.degree(v) != 3) continue;
            int a = f.walk[(i + k - 1) % k];
            int b = f.walk[(i + 1) % k];
            if (g.degree(a) <= 4 && g.degree(b) <= 4) {
                ix.special[v] = 1;
                special_faces_of[v].push_back(f.id);
            }
        }
    }

    for (int v = 1; v <= g.n(); ++v) {
        if (g.degree(v) != 3 || ix.on_outer[v]) continue;
        int low_internal = 0;
        for (int u : g.neighbors(v))
            if (!ix.on_outer[u] && g.degree(u) <= 4) ++low_internal;
        if (low_internal >= 2) ix.potentially_special[v] = 1;
    }

    for (const Face& f : g.faces()) {
        if (f.degree() != 3 || !ix.internal_face[f.id]) continue;
        for (int i = 0; i < 3; ++i) {
            int x = f.walk[i];
            if (g.degree(x) != 3) continue;
            for (int v : g.neighbors(x)) {
                if (std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end())
                    continue;
                ix.pendant_incidences.push_back({v, x, f.id});
                ix.pendant_3faces[v].push_back(f.id);
            }
        }
    }

    // good 5-vertices
    for (int v = 1; v <= g.n(); ++v) {
        if (g.degree(v) != 5 || ix.on_outer[v]) continue;
        std::vector<char> blocked(6, 0);
        const auto& nb = g.neighbors(v);
        for (int i = 0; i < 5; ++i) {
            int u = nb[i];
            if (ix.special[u]) blocked[i] = 1;
            for (int fid : ix.pendant_3faces[v]) {
                if (!sig::is_pendant_charged(ix.signature[fid])) continue;
                const auto& verts = g.face(fid).vertices;
                if (std::find(verts.begin(), verts.end(), u) != verts.end()) blocked[i] = 1;
            }
            if (ix.triangular[v]) {
                // the triple must avoid the neighbors on v's 3-face(s)
                for (int fid : ix.incident_faces[v]) {
                    if (g.face(fid).degree() != 3) continue;
                    const auto& verts = g.face(fid).vertices;
                    if (std::find(verts.begin(), verts.end(), u) != verts.end()) blocked[i] = 1;
                }
            }
        }
        for (int s = 0; s < 5 && !ix.good5[v]; ++s)
            if (!blocked[s] && !blocked[(s + 1) % 5] && !blocked[(s + 2) % 5]) ix.good5[v] = 1;
    }

    for (int v = 1; v <= g.n(); ++v) {
        if (ix.on_outer[v]) continue;
        int d = g.degree(v);
        if ((d == 4 && !ix.triangular[v]) || (d == 5 && ix.good5[v]) || d >= 6)
            ix.good4plus[v] = 1;
    }

    for (const Face& f : g.faces()) {
        if (f.degree() != 5 || !ix.internal_face[f.id]) continue;
        for (int u : f.vertices) {
            if (!ix.good4plus[u]) continue;
            int others = 0;
            for (int w : f.vertices)
                if (w != u && g.degree(w) >= 5) ++others;
            if (others >= 2) {
                ix.rich[f.id] = 1;
                break;
            }
        }
    }

    for (int v = 1; v <= g.n(); ++v) {
        for (int fid : special_faces_of[v]) {
            const Face& f = g.face(fid);
            for (int x : g.neighbors(v)) {
                if (std::find(f.vertices.begin(), f.vertices.end(), x) != f.vertices.end())
                    continue;
                if (g.degree(x) >= 5 || ix.on_outer[x])
                    ix.pendant_special_pairs.emplace_back(x, fid);
            }
        }
    }
    std::sort(ix.pendant_special_pairs.begin(), ix.pendant_special_pairs.end());
    ix.pendant_special_pairs.erase(
        std::unique(ix.pendant_special_pairs.begin(), ix.pendant_special_pairs.end()),
        ix.pendant_special_pairs.end());

    return ix;
}

}  // namespace wb
