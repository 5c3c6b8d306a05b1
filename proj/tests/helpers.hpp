#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "workbench/plane_graph.hpp"

namespace wbtest {

// Builds a rotation system from a straight-line drawing: neighbors are
// sorted clockwise (decreasing angle) around each vertex. Lets fixtures be
// written as coordinates instead of hand-derived rotations; the PlaneGraph
// constructor then enforces the Euler check, so a non-planar drawing or a
// typo fails loudly.
class Drawing {
  public:
    Drawing& vertex(int id, double x, double y) {
        pts_[id] = {x, y};
        return *this;
    }

    Drawing& edge(int a, int b) {
        edges_.emplace_back(a, b);
        return *this;
    }

    Drawing& path(std::initializer_list<int> ids) {
        int prev = -1;
        for (int v : ids) {
            if (prev > 0) edge(prev, v);
            prev = v;
        }
        return *this;
    }

    Drawing& cycle(std::initializer_list<int> ids) {
        std::vector<int> v(ids);
        for (size_t i = 0; i < v.size(); ++i) edge(v[i], v[(i + 1) % v.size()]);
        return *this;
    }

    wb::PlaneGraph build() const {
        int n = pts_.rbegin()->first;
        std::vector<std::vector<std::pair<double, int>>> ang(n + 1);
        for (auto [a, b] : edges_) {
            ang[a].emplace_back(angle(a, b), b);
            ang[b].emplace_back(angle(b, a), a);
        }
        std::vector<std::vector<int>> rot(n + 1);
        for (int v = 1; v <= n; ++v) {
            std::sort(ang[v].begin(), ang[v].end(),
                      [](const auto& p, const auto& q) { return p.first > q.first; });
            for (auto& [_, u] : ang[v]) rot[v].push_back(u);
        }
        return wb::PlaneGraph::from_rotation(std::move(rot));
    }

  private:
    double angle(int from, int to) const {
        auto [x0, y0] = pts_.at(from);
        auto [x1, y1] = pts_.at(to);
        return std::atan2(y1 - y0, x1 - x0);
    }

    std::map<int, std::pair<double, double>> pts_;
    std::vector<std::pair<int, int>> edges_;
};

// --- canonical fixtures ----------------------------------------------------

inline wb::PlaneGraph k3() {
    return wb::parse_rotation_text("3\n1: 2 3\n2: 3 1\n3: 1 2\n");
}

inline wb::PlaneGraph cycle_graph(int len) {
    Drawing d;
    for (int i = 1; i <= len; ++i) {
        double a = 2 * M_PI * i / len;
        d.vertex(i, std::cos(a), std::sin(a));
    }
    for (int i = 1; i <= len; ++i) d.edge(i, i % len + 1);
    return d.build();
}

// Figure-2 gadget: 6-cycle u1..u6 (ids 1..6) with interior triangle t1t2t3
// (ids 7..9) matched to u1, u3, u5.
inline wb::PlaneGraph b9() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, std::cos(a), std::sin(a));
    }
    d.vertex(7, 0.4 * std::cos(M_PI / 2), 0.4 * std::sin(M_PI / 2));
    d.vertex(8, 0.4 * std::cos(-M_PI / 6), 0.4 * std::sin(-M_PI / 6));
    d.vertex(9, 0.4 * std::cos(-5 * M_PI / 6), 0.4 * std::sin(-5 * M_PI / 6));
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9}).edge(1, 7).edge(3, 8).edge(5, 9);
    return d.build();
}

inline std::vector<int> b9_outer_hexagon() { return {1, 2, 3, 4, 5, 6}; }
inline std::vector<int> b9_triangle() { return {7, 8, 9}; }

// Triangle 1,2,3 with inner apex 4 and outer apex 5, both joined to all
// triangle vertices.
inline wb::PlaneGraph double_pyramid() {
    Drawing d;
    d.vertex(1, 0, 1).vertex(2, 0.87, -0.5).vertex(3, -0.87, -0.5).vertex(4, 0, 0).vertex(5, 0, 3);
    d.cycle({1, 2, 3});
    for (int t : {1, 2, 3}) d.edge(4, t);
    for (int t : {1, 2, 3}) d.edge(5, t);
    return d.build();
}

inline wb::PlaneGraph c5_with_chord() {
    Drawing d;
    for (int i = 1; i <= 5; ++i) {
        double a = M_PI / 2 - 2 * M_PI * (i - 1) / 5;
        d.vertex(i, std::cos(a), std::sin(a));
    }
    d.cycle({1, 2, 3, 4, 5}).edge(1, 3);
    return d.build();
}

// Two triangles joined by a two-edge path: 1-2-3, 3-4, 4-5, triangle 5-6-7.
inline wb::PlaneGraph bowtie_with_spacer() {
    Drawing d;
    d.vertex(1, -3, 1).vertex(2, -3, -1).vertex(3, -2, 0).vertex(4, 0, 0);
    d.vertex(5, 2, 0).vertex(6, 3, 1).vertex(7, 3, -1);
    d.cycle({1, 2, 3}).path({3, 4, 5}).cycle({5, 6, 7});
    return d.build();
}

inline wb::PlaneGraph single_edge() { return wb::parse_rotation_text("2\n1: 2\n2: 1\n"); }

inline wb::PlaneGraph k4() {
    Drawing d;
    d.vertex(1, 0, 1).vertex(2, 0.87, -0.5).vertex(3, -0.87, -0.5).vertex(4, 0, 0);
    d.cycle({1, 2, 3});
    for (int t : {1, 2, 3}) d.edge(4, t);
    return d.build();
}

// --- discharging fixtures ----------------------------------------------------
// A family built around a hexagonal outer cycle (ids 1..6), an inner triangle
// {7,8,9} and a ring of donors 10,11,12 of degree >= 5. Variants raise the
// degree of triangle vertices to realize the internal (3,3,3), (3,3,4),
// (3,3,5) and (3,4,4) faces whose balance the face lemma computes.

namespace detail {

inline Drawing donor_ring_base() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    const double tri[] = {M_PI / 2, -M_PI / 6, -5 * M_PI / 6};
    for (int i = 0; i < 3; ++i)
        d.vertex(7 + i, 0.5 * std::cos(tri[i]), 0.5 * std::sin(tri[i]));
    for (int i = 0; i < 3; ++i)
        d.vertex(10 + i, 1.5 * std::cos(tri[i]), 1.5 * std::sin(tri[i]));
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9}).cycle({10, 11, 12});
    d.edge(7, 10).edge(8, 11).edge(9, 12);
    d.edge(10, 1).edge(10, 2).edge(11, 3).edge(11, 4).edge(12, 5).edge(12, 6);
    return d;
}

}  // namespace detail

inline std::vector<int> hexagon_outer() { return {1, 2, 3, 4, 5, 6}; }

// internal (3,3,3)-face {7,8,9} with three internal 5-vertex pendant donors
inline wb::PlaneGraph face333_fixture() { return detail::donor_ring_base().build(); }

// internal (3,3,4)-face: vertex 9 raised to degree 4
inline wb::PlaneGraph face334_fixture() {
    return detail::donor_ring_base().edge(9, 11).build();
}

// internal (3,3,5)-face: vertex 9 raised to degree 5
inline wb::PlaneGraph face335_fixture() {
    return detail::donor_ring_base().edge(9, 11).edge(9, 10).build();
}

// internal (3,4,4)-face: vertices 8 and 9 raised to degree 4
inline wb::PlaneGraph face344_fixture() {
    return detail::donor_ring_base().edge(8, 12).edge(9, 10).build();
}

// internal 5-face {7,12,9,10,11} carrying two internal nontriangular
// 4-vertices (7 and 9); outer cycle is the hexagon
inline wb::PlaneGraph r1b_fixture() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    const double pent[] = {90, 162, 234, 306, 18};
    for (int i = 0; i < 5; ++i) {
        double a = pent[i] * M_PI / 180;
        d.vertex(7 + i, std::cos(a), std::sin(a));
    }
    d.vertex(12, 0, 0);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9, 10, 11});
    d.edge(12, 7).edge(12, 9);
    d.edge(7, 1).edge(8, 6).edge(9, 5).edge(10, 3).edge(11, 2);
    return d.build();
}

// internal (3,3,6)-face {7,8,9} with the 6-vertex 9 in the center
inline wb::PlaneGraph r2d_fixture() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(7, -0.5, 0.9).vertex(8, 0.5, 0.9).vertex(9, 0, 0);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9});
    d.edge(7, 1).edge(8, 2);
    d.edge(9, 3).edge(9, 4).edge(9, 5).edge(9, 6);
    return d.build();
}

// Special vertex 7 on an internal pentagon with a degree-5 pendant neighbor
// 12 off the face; outer cycle is the hexagon 1..6. Also carries a 7-face.
inline wb::PlaneGraph fig3_gadget() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    const double cx = 0, cy = -0.5;
    int id = 7;
    for (double deg : {90.0, 162.0, 234.0, 306.0, 18.0}) {
        double a = deg * M_PI / 180;
        d.vertex(id++, cx + std::cos(a), cy + std::sin(a));
    }
    d.vertex(12, 0, 1.7);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9, 10, 11});
    d.edge(12, 7).edge(12, 1).edge(12, 2).edge(12, 6).edge(12, 5);
    d.edge(9, 4).edge(10, 4);
    return d.build();
}

// L1 oracle gadget: internal 2-vertex inside an outer pentagon
inline wb::PlaneGraph l1_gadget() {
    Drawing d;
    for (int i = 1; i <= 5; ++i) {
        double a = M_PI / 2 - 2 * M_PI * (i - 1) / 5;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(6, 0.2, 0.4);
    d.cycle({1, 2, 3, 4, 5}).edge(6, 1).edge(6, 3);
    return d.build();
}

// L2 oracle gadget: internal 3-vertex 10 whose neighbors 7,8,9 are internal
// 4-vertices
inline wb::PlaneGraph l2_gadget() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(7, 0, 1).vertex(8, 0.87, -0.5).vertex(9, -0.87, -0.5).vertex(10, 0, 0);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9});
    d.edge(10, 7).edge(10, 8).edge(10, 9);
    d.edge(7, 1).edge(8, 3).edge(9, 5);
    return d.build();
}

// L7 oracle gadget: internal (3,3,3)-face {7,8,9}; 8's pendant neighbor 10
// is an internal 3-vertex
inline wb::PlaneGraph l7_gadget() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(7, -0.4, 0.6).vertex(8, 0.4, 0.6).vertex(9, 0, 0).vertex(10, 1.2, 0.6);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9});
    d.edge(7, 1).edge(8, 10).edge(9, 4).edge(10, 2).edge(10, 3);
    return d.build();
}

// L4 detector fixture: internal 3-vertex 13 adjacent to 3-vertices of two
// internal (3,3,3)-faces
inline wb::PlaneGraph l4_fixture() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(7, -0.8, 0.5).vertex(8, -1.3, -0.5).vertex(9, -0.3, -0.5);
    d.vertex(10, 0.8, 0.5).vertex(11, 0.3, -0.5).vertex(12, 1.3, -0.5);
    d.vertex(13, 0, 1.2);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9}).cycle({10, 11, 12});
    d.edge(13, 7).edge(13, 10).edge(13, 1);
    d.edge(8, 5).edge(9, 4).edge(11, 4).edge(12, 3);
    return d.build();
}

// L8 detector fixture: internal (3,3,4)-face {7,8,9} whose 4-vertex 9 has
// the internal 3-vertex 10 among its off-face neighbors
inline wb::PlaneGraph l8_fixture() {
    Drawing d;
    for (int i = 1; i <= 6; ++i) {
        double a = M_PI / 2 - (i - 1) * M_PI / 3;
        d.vertex(i, 3 * std::cos(a), 3 * std::sin(a));
    }
    d.vertex(7, -0.5, 0.6).vertex(8, -0.5, -0.6).vertex(9, 0.5, 0).vertex(10, 1.5, 0);
    d.cycle({1, 2, 3, 4, 5, 6}).cycle({7, 8, 9});
    d.edge(7, 1).edge(8, 5).edge(9, 10).edge(9, 4).edge(10, 2).edge(10, 3);
    return d.build();
}

// --- independent oracles ---------------------------------------------------

// Brute-force simple-cycle enumerator: DFS from every start vertex with no
// canonical-direction shortcuts, deduplicated via normalized forms in a set.
inline std::set<std::vector<int>> brute_cycles(const wb::PlaneGraph& g, int max_len) {
    std::set<std::vector<int>> found;
    std::vector<int> path;
    std::vector<char> used(g.n() + 1, 0);
    auto normalize = [](std::vector<int> c) {
        int r = static_cast<int>(c.size());
        std::vector<int> best;
        for (int rev = 0; rev < 2; ++rev) {
            for (int s = 0; s < r; ++s) {
                std::vector<int> cand(r);
                for (int i = 0; i < r; ++i) cand[i] = c[(s + i) % r];
                if (best.empty() || cand < best) best = cand;
            }
            std::reverse(c.begin(), c.end());
        }
        return best;
    };
    auto dfs = [&](auto&& self, int v) -> void {
        for (int u : g.neighbors(v)) {
            if (u == path.front() && path.size() >= 3) found.insert(normalize(path));
            if (used[u] || static_cast<int>(path.size()) >= max_len) continue;
            used[u] = 1;
            path.push_back(u);
            self(self, u);
            path.pop_back();
            used[u] = 0;
        }
    };
    for (int s = 1; s <= g.n(); ++s) {
        path.assign(1, s);
        used[s] = 1;
        dfs(dfs, s);
        used[s] = 0;
    }
    return found;
}

// Union-find component count of the graph minus `removed`.
inline int components_after_removal(const wb::PlaneGraph& g, const std::vector<int>& removed) {
    std::vector<int> parent(g.n() + 1);
    for (int v = 0; v <= g.n(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<char> gone(g.n() + 1, 0);
    for (int v : removed) gone[v] = 1;
    for (int v = 1; v <= g.n(); ++v) {
        if (gone[v]) continue;
        for (int u : g.neighbors(v))
            if (!gone[u]) parent[find(u)] = find(v);
    }
    std::set<int> roots;
    for (int v = 1; v <= g.n(); ++v)
        if (!gone[v]) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

inline std::vector<int> face_degree_multiset(const wb::PlaneGraph& g) {
    std::vector<int> ds;
    for (const auto& f : g.faces()) ds.push_back(f.degree());
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace wbtest
