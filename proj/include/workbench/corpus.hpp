#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "workbench/plane_graph.hpp"
#include "workbench/structure.hpp"

namespace wb {

// Canonical form of a rotation system up to orientation-preserving
// isomorphism and reflection: the lexicographically smallest BFS labeling
// code over all start darts and both orientations. Two connected plane
// graphs are isomorphic as embedded graphs iff their codes agree.
inline std::string canonical_code(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size()) - 1;
    std::string best;
    std::vector<int> label(n + 1), entry_pos(n + 1), order;
    order.reserve(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (int u = 1; u <= n; ++u) {
            int deg = static_cast<int>(rot[u].size());
            for (int s = 0; s < deg; ++s) {
                std::fill(label.begin(), label.end(), 0);
                order.clear();
                std::string code;
                code.push_back(static_cast<char>(n));
                label[u] = 1;
                entry_pos[u] = s;
                order.push_back(u);
                int next = 2;
                for (size_t qi = 0; qi < order.size(); ++qi) {
                    int w = order[qi];
                    int dw = static_cast<int>(rot[w].size());
                    for (int i = 0; i < dw; ++i) {
                        int idx = dir == 0 ? (entry_pos[w] + i) % dw
                                           : (entry_pos[w] - i + 2 * dw) % dw;
                        int x = rot[w][idx];
                        if (!label[x]) {
                            label[x] = next++;
                            // the child starts its walk at the dart back to w
                            int dx = static_cast<int>(rot[x].size());
                            for (int j = 0; j < dx; ++j)
                                if (rot[x][j] == w) entry_pos[x] = j;
                            order.push_back(x);
                        }
                        code.push_back(static_cast<char>(label[x]));
                    }
                    code.push_back('\0');
                }
                if (best.empty() || code < best) best = std::move(code);
            }
        }
        if (n == 1) break;
    }
    if (best.empty()) best = std::string(1, static_cast<char>(n));  // isolated vertex
    return best;
}

inline std::string canonical_code(const PlaneGraph& g) { return canonical_code(g.rotation()); }

namespace detail {

// One occurrence of a vertex on a face walk together with its predecessor
// neighbor: the corner the new vertex attaches into.
struct WalkCorner {
    int vertex;
    int pred;
};

inline std::vector<WalkCorner> face_corners(const Face& f) {
    std::vector<WalkCorner> corners;
    int k = f.degree();
    for (int i = 0; i < k; ++i) corners.push_back({f.walk[i], f.walk[(i + k - 1) % k]});
    return corners;
}

// Rotation system of the parent plus a new vertex attached inside face f at
// the chosen corners (walk order). The new vertex's rotation is the reversed
// attachment order, which keeps the embedding spherical under the tracing
// convention.
inline std::vector<std::vector<int>> insert_vertex(const PlaneGraph& g,
                                                   const std::vector<WalkCorner>& chosen) {
    int vn = g.n() + 1;
    std::vector<std::vector<int>> rot(vn + 1);
    for (int v = 1; v <= g.n(); ++v) rot[v] = g.neighbors(v);
    for (const WalkCorner& c : chosen) {
        auto& r = rot[c.vertex];
        auto it = std::find(r.begin(), r.end(), c.pred);
        r.insert(it == r.end() ? r.end() : it + 1, vn);
    }
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) rot[vn].push_back(it->vertex);
    return rot;
}

// O(sum deg^2) test for a 4-cycle: two vertices with two common neighbors.
inline bool has_4cycle(const std::vector<std::vector<int>>& rot) {
    int n = static_cast<int>(rot.size()) - 1;
    std::vector<int> hits(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int u : rot[x])
            for (int y : rot[u])
                if (y > x && ++hits[y] >= 2) return true;
    }
    return false;
}

// Adjacency-level class check (no embedding required): no 4-cycles and
// triangle distance at least 2.
inline bool class_member_quick(const std::vector<std::vector<int>>& rot) {
    if (has_4cycle(rot)) return false;
    int n = static_cast<int>(rot.size()) - 1;
    std::vector<std::vector<int>> triangles;
    for (int a = 1; a <= n; ++a)
        for (int b : rot[a]) {
            if (b <= a) continue;
            for (int c : rot[b]) {
                if (c <= b) continue;
                if (std::find(rot[a].begin(), rot[a].end(), c) != rot[a].end())
                    triangles.push_back({a, b, c});
            }
        }
    if (triangles.size() < 2) return true;
    for (size_t i = 0; i + 1 < triangles.size(); ++i) {
        std::vector<int> dist(n + 1, -1);
        std::vector<int> q;
        for (int v : triangles[i]) {
            dist[v] = 0;
            q.push_back(v);
        }
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            if (dist[v] >= 2) continue;
            for (int u : rot[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        for (size_t j = i + 1; j < triangles.size(); ++j)
            for (int v : triangles[j])
                if (dist[v] >= 0 && dist[v] < 2) return false;
    }
    return true;
}

}  // namespace detail

// All one-vertex plane extensions of g (as rotation systems), possibly with
// duplicates across faces; deduplication is the generator's job. With
// class_pruning, attachment sets that force a 4-cycle (two corners at walk
// gap 2) or two triangles through the new vertex (two corner pairs at gap 1)
// are cut during enumeration; this never prunes a class member.
inline std::vector<std::vector<std::vector<int>>> plane_extensions(const PlaneGraph& g,
                                                                   bool class_pruning = false) {
    std::vector<std::vector<std::vector<int>>> out;
    if (g.n() == 1) {
        out.push_back({{}, {2}, {1}});
        return out;
    }
    for (const Face& f : g.faces()) {
        auto corners = detail::face_corners(f);
        int k = static_cast<int>(corners.size());
        std::vector<detail::WalkCorner> chosen;
        std::vector<int> chosen_pos;
        std::vector<char> used_vertex(g.n() + 1, 0);
        auto rec = [&](auto&& self, int i, int gap1_pairs) -> void {
            if (i == k) {
                if (!chosen.empty()) out.push_back(detail::insert_vertex(g, chosen));
                return;
            }
            self(self, i + 1, gap1_pairs);
            if (used_vertex[corners[i].vertex]) return;
            int new_gap1 = gap1_pairs;
            if (class_pruning) {
                for (int p : chosen_pos) {
                    int gap = std::min((i - p + k) % k, (p - i + k) % k);
                    if (gap == 2) return;  // definite 4-cycle through the new vertex
                    if (gap == 1) ++new_gap1;
                }
                if (new_gap1 >= 2) return;  // two triangles sharing the new vertex
            }
            used_vertex[corners[i].vertex] = 1;
            chosen.push_back(corners[i]);
            chosen_pos.push_back(i);
            self(self, i + 1, new_gap1);
            chosen_pos.pop_back();
            chosen.pop_back();
            used_vertex[corners[i].vertex] = 0;
        };
        rec(rec, 0, 0);
    }
    return out;
}

// Exhaustive generation of connected simple plane graphs up to max_n
// vertices, one callback per graph, deduplicated by canonical code. Every
// connected plane graph on n+1 vertices arises by inserting a non-cutvertex
// back into a face of a connected plane graph on n vertices, so level-wise
// insertion with deduplication is complete. With class_only set, graphs
// violating the no-4-cycle / triangle-distance class are pruned; the class
// is closed under vertex deletion, so pruning keeps completeness.
inline void generate_connected_plane_graphs(int max_n, bool class_only,
                                            const std::function<void(const PlaneGraph&)>& emit) {
    if (max_n < 1) return;
    std::vector<std::string> level = {emit_planar_code({parse_rotation_text("1\n1:\n")}, false)};
    {
        PlaneGraph k1 = parse_planar_code(level[0])[0];
        if (!class_only || is_class_member(k1).in_class) emit(k1);
    }
    for (int n = 1; n < max_n; ++n) {
        std::vector<std::string> next_level;
        std::unordered_set<std::string> seen;
        for (const std::string& blob : level) {
            PlaneGraph parent = parse_planar_code(blob)[0];
            for (auto& rot : plane_extensions(parent, class_only)) {
                if (class_only && !detail::class_member_quick(rot)) continue;
                std::string code = canonical_code(rot);
                if (!seen.insert(code).second) continue;
                PlaneGraph child = PlaneGraph::from_rotation(std::move(rot));
                next_level.push_back(emit_planar_code({child}, false));
                emit(child);
            }
        }
        level = std::move(next_level);
    }
}

// Deterministic random plane graph on exactly n vertices built by repeated
// random insertions, optionally constrained to the class. Returns nullopt if
// the restart budget runs out.
inline std::optional<PlaneGraph> random_plane_graph(int n, std::mt19937_64& rng, bool class_only,
                                                    int max_restarts = 80) {
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        PlaneGraph g = parse_rotation_text("1\n1:\n");
        bool stuck = false;
        while (g.n() < n && !stuck) {
            if (g.n() == 1) {
                g = parse_rotation_text("2\n1: 2\n2: 1\n");
                continue;
            }
            bool placed = false;
            for (int tries = 0; tries < 60 && !placed; ++tries) {
                const Face& f = g.face(std::uniform_int_distribution<int>(
                    0, g.face_count() - 1)(rng));
                auto corners = detail::face_corners(f);
                std::vector<detail::WalkCorner> chosen;
                std::vector<char> used(g.n() + 1, 0);
                for (const auto& c : corners) {
                    if (used[c.vertex]) continue;
                    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                        chosen.push_back(c);
                        used[c.vertex] = 1;
                    }
                }
                if (chosen.empty()) continue;
                auto rot = detail::insert_vertex(g, chosen);
                PlaneGraph child = PlaneGraph::from_rotation(std::move(rot));
                if (class_only && !is_class_member(child).in_class) continue;
                g = std::move(child);
                placed = true;
            }
            stuck = !placed;
        }
        if (g.n() == n) return g;
    }
    return std::nullopt;
}

}  // namespace wb
