#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "workbench/errors.hpp"

namespace wb {

// A traced face. The boundary is stored as the closed walk of dart origins,
// so degree counts dart traversals: an edge walked twice on one face (a
// bridge) contributes 2.
struct Face {
    int id = -1;
    std::vector<int> walk;      // v0, v1, ..., v_{k-1}; dart i is (walk[i] -> walk[i+1 mod k])
    std::vector<int> vertices;  // sorted, deduplicated

    int degree() const { return static_cast<int>(walk.size()); }
};

// The designated exterior cycle C. Always the boundary of a traced face with
// all vertices distinct.
struct OuterCycle {
    std::vector<int> vertices;
    int r = 0;
    int face_id = -1;
};

// Simple connected plane graph given by a rotation system: for each vertex
// the clockwise cyclic order of its neighbors. Faces are derived at
// construction with the fixed convention that the successor of dart (u,v) is
// (v,w) where w immediately follows u in the clockwise rotation at v.
// Immutable after construction.
class PlaneGraph {
  public:
    // rot[0] is unused; rot[v] lists neighbors of v for v in 1..n.
    static PlaneGraph from_rotation(std::vector<std::vector<int>> rot) {
        PlaneGraph g;
        if (rot.size() < 2) throw InvariantError("graph must have at least one vertex");
        g.n_ = static_cast<int>(rot.size()) - 1;
        g.rot_ = std::move(rot);
        g.validate_simple_symmetric();
        g.build_lookup();
        g.check_connected();
        g.trace_faces();
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }

    bool adjacent(int u, int v) const {
        const auto& s = nbr_sorted_[u];
        return std::binary_search(s.begin(), s.end(), v);
    }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    // Face on the side of dart (u,v) under the tracing convention.
    int face_of_dart(int u, int v) const { return face_of_dart_[dart_id(u, v)]; }

    bool has_outer() const { return outer_.has_value(); }
    const OuterCycle& outer() const {
        if (!outer_) throw NoOuterCycleError("no outer cycle designated");
        return *outer_;
    }

    bool on_outer(int v) const { return outer_ && outer_mask_[v]; }

    // Copy of this graph with the face bounded by `cycle` designated as the
    // outer cycle. The cycle must be the boundary walk of a traced face, up
    // to rotation and reflection, with all vertices distinct.
    PlaneGraph with_outer(const std::vector<int>& cycle) const {
        int fid = find_face_of_cycle(cycle);
        if (fid < 0) throw PreconditionError("outer cycle is not the boundary of any face");
        PlaneGraph g = *this;
        g.set_outer_face(fid, cycle);
        return g;
    }

    PlaneGraph with_outer_face(int face_id) const {
        const Face& f = faces_.at(face_id);
        std::vector<int> uniq = f.vertices;
        if (static_cast<int>(uniq.size()) != f.degree())
            throw PreconditionError("face boundary is not a simple cycle");
        PlaneGraph g = *this;
        g.set_outer_face(face_id, f.walk);
        return g;
    }

    // Successor of u in the clockwise rotation at v.
    int succ_in_rotation(int v, int u) const {
        int i = pos_in_rotation(v, u);
        const auto& r = rot_[v];
        return r[(i + 1) % r.size()];
    }

    int pos_in_rotation(int v, int u) const {
        const auto& s = nbr_sorted_[v];
        auto it = std::lower_bound(s.begin(), s.end(), u);
        if (it == s.end() || *it != u) throw InvariantError("not a neighbor");
        return nbr_pos_[v][static_cast<size_t>(it - s.begin())];
    }

  private:
    PlaneGraph() = default;

    int dart_id(int u, int v) const { return dart_base_[u] + pos_in_rotation(u, v); }

    void validate_simple_symmetric() {
        std::int64_t deg_sum = 0;
        for (int v = 1; v <= n_; ++v) {
            std::vector<int> seen;
            for (int u : rot_[v]) {
                if (u < 1 || u > n_) throw InvariantError("neighbor id out of range");
                if (u == v) throw InvariantError("loop at vertex " + std::to_string(v));
                seen.push_back(u);
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw InvariantError("parallel edge at vertex " + std::to_string(v));
            deg_sum += static_cast<std::int64_t>(rot_[v].size());
        }
        for (int v = 1; v <= n_; ++v)
            for (int u : rot_[v]) {
                const auto& ru = rot_[u];
                if (std::find(ru.begin(), ru.end(), v) == ru.end())
                    throw InvariantError("asymmetric rotation: " + std::to_string(v) + "-" +
                                         std::to_string(u));
            }
        m_ = static_cast<int>(deg_sum / 2);
    }

    void build_lookup() {
        nbr_sorted_.assign(n_ + 1, {});
        nbr_pos_.assign(n_ + 1, {});
        dart_base_.assign(n_ + 2, 0);
        for (int v = 1; v <= n_; ++v) {
            std::vector<std::pair<int, int>> tmp;
            for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
                tmp.emplace_back(rot_[v][i], i);
            std::sort(tmp.begin(), tmp.end());
            for (auto [u, i] : tmp) {
                nbr_sorted_[v].push_back(u);
                nbr_pos_[v].push_back(i);
            }
            dart_base_[v + 1] = dart_base_[v] + static_cast<int>(rot_[v].size());
        }
    }

    void check_connected() {
        std::vector<char> vis(n_ + 1, 0);
        std::queue<int> q;
        q.push(1);
        vis[1] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : rot_[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    ++cnt;
                    q.push(u);
                }
        }
        if (cnt != n_) throw InvariantError("graph is disconnected");
    }

    void trace_faces() {
        int dart_count = dart_base_[n_ + 1];
        face_of_dart_.assign(dart_count, -1);
        faces_.clear();
        for (int v = 1; v <= n_; ++v) {
            for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
                if (face_of_dart_[dart_base_[v] + i] >= 0) continue;
                Face f;
                f.id = static_cast<int>(faces_.size());
                int cu = v, cv = rot_[v][i];
                do {
                    face_of_dart_[dart_id(cu, cv)] = f.id;
                    f.walk.push_back(cu);
                    int w = succ_in_rotation(cv, cu);
                    cu = cv;
                    cv = w;
                } while (!(cu == v && cv == rot_[v][i]));
                f.vertices = f.walk;
                std::sort(f.vertices.begin(), f.vertices.end());
                f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()),
                                 f.vertices.end());
                faces_.push_back(std::move(f));
            }
        }
        if (n_ == 1 && faces_.empty()) faces_.push_back(Face{0, {}, {}});
        int fcount = static_cast<int>(faces_.size());
        if (n_ - m_ + fcount != 2)
            throw InvariantError("rotation system is not a plane embedding (Euler check failed)");
    }

    int find_face_of_cycle(const std::vector<int>& cycle) const {
        int r = static_cast<int>(cycle.size());
        if (r < 3) return -1;
        std::vector<int> uniq = cycle;
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return -1;
        for (const Face& f : faces_) {
            if (f.degree() != r || f.vertices != uniq) continue;
            // same cyclic sequence up to rotation/reflection?
            for (int shift = 0; shift < r; ++shift) {
                bool fwd = true, bwd = true;
                for (int i = 0; i < r; ++i) {
                    if (f.walk[(shift + i) % r] != cycle[i]) fwd = false;
                    if (f.walk[(shift - i + 2 * r) % r] != cycle[i]) bwd = false;
                }
                if (fwd || bwd) return f.id;
            }
        }
        return -1;
    }

    void set_outer_face(int fid, const std::vector<int>& cycle) {
        outer_ = OuterCycle{cycle, static_cast<int>(cycle.size()), fid};
        outer_mask_.assign(n_ + 1, 0);
        for (int v : cycle) outer_mask_[v] = 1;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> nbr_sorted_;
    std::vector<std::vector<int>> nbr_pos_;
    std::vector<int> dart_base_;
    std::vector<Face> faces_;
    std::vector<int> face_of_dart_;
    std::optional<OuterCycle> outer_;
    std::vector<char> outer_mask_;
};

// ---------------------------------------------------------------------------
// .rot text format: line 1 is n, then n lines "i: a b c ..." giving the
// clockwise neighbor order. '#' starts a comment; blank lines are ignored.

inline PlaneGraph parse_rotation_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto is_blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!is_blank) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty .rot input");
    int n = 0;
    {
        std::istringstream first(lines[0]);
        if (!(first >> n) || n < 1) throw ParseError("bad vertex count line");
        std::string rest;
        if (first >> rest) throw ParseError("trailing tokens after vertex count");
    }
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " vertex lines");
    std::vector<std::vector<int>> rot(n + 1);
    std::vector<char> seen(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        const std::string& l = lines[k];
        auto colon = l.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':' in vertex line");
        int id = 0;
        {
            std::istringstream head(l.substr(0, colon));
            if (!(head >> id)) throw ParseError("bad vertex id");
            std::string rest;
            if (head >> rest) throw ParseError("bad vertex id");
        }
        if (id < 1 || id > n) throw ParseError("vertex id out of range: " + std::to_string(id));
        if (seen[id]) throw ParseError("duplicate vertex line: " + std::to_string(id));
        seen[id] = 1;
        std::istringstream tail(l.substr(colon + 1));
        int u;
        while (tail >> u) rot[id].push_back(u);
        if (!tail.eof() && tail.fail()) throw ParseError("bad neighbor token");
    }
    return PlaneGraph::from_rotation(std::move(rot));
}

inline std::string emit_rotation_text(const PlaneGraph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (int v = 1; v <= g.n(); ++v) {
        out << v << ":";
        for (int u : g.neighbors(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// planar_code binary format: optional ">>planar_code<<" header, then per
// graph one byte n (1..255) followed by, for each vertex, its neighbor bytes
// in rotation order terminated by 0.

inline std::vector<PlaneGraph> parse_planar_code(std::istream& in) {
    std::vector<PlaneGraph> out;
    int first = in.peek();
    if (first == '>') {
        static const std::string kHeader = ">>planar_code<<";
        std::string got(kHeader.size(), '\0');
        in.read(got.data(), static_cast<std::streamsize>(got.size()));
        if (in.gcount() != static_cast<std::streamsize>(kHeader.size()) || got != kHeader)
            throw ParseError("bad planar_code header");
    }
    for (;;) {
        int nb = in.get();
        if (nb == std::char_traits<char>::eof()) break;
        int n = nb & 0xff;
        if (n == 0) throw ParseError("planar_code vertex count 0 (wide format unsupported)");
        std::vector<std::vector<int>> rot(n + 1);
        for (int v = 1; v <= n; ++v) {
            for (;;) {
                int b = in.get();
                if (b == std::char_traits<char>::eof())
                    throw ParseError("truncated planar_code record");
                int u = b & 0xff;
                if (u == 0) break;
                if (u > n)
                    throw ParseError("planar_code neighbor " + std::to_string(u) +
                                     " out of range for n=" + std::to_string(n));
                rot[v].push_back(u);
            }
        }
        out.push_back(PlaneGraph::from_rotation(std::move(rot)));
    }
    return out;
}

inline std::vector<PlaneGraph> parse_planar_code(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return parse_planar_code(in);
}

inline void emit_planar_code(std::ostream& out, const PlaneGraph& g) {
    if (g.n() > 255) throw LimitError("planar_code supports n <= 255");
    out.put(static_cast<char>(g.n()));
    for (int v = 1; v <= g.n(); ++v) {
        for (int u : g.neighbors(v)) out.put(static_cast<char>(u));
        out.put('\0');
    }
}

inline std::string emit_planar_code(const std::vector<PlaneGraph>& graphs, bool header = true) {
    std::ostringstream out(std::ios::binary);
    if (header) out << ">>planar_code<<";
    for (const PlaneGraph& g : graphs) emit_planar_code(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// Cycle utilities.

inline bool is_cycle_of(const PlaneGraph& g, const std::vector<int>& c) {
    int r = static_cast<int>(c.size());
    if (r < 3) return false;
    std::vector<int> uniq = c;
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return false;
    if (uniq.front() < 1 || uniq.back() > g.n()) return false;
    for (int i = 0; i < r; ++i)
        if (!g.adjacent(c[i], c[(i + 1) % r])) return false;
    return true;
}

// Simple cycles of length 3..max_len, each reported once up to rotation and
// reflection as its lexicographically minimal representative (smallest
// vertex first, smaller second vertex of the two directions), sorted.
inline std::vector<std::vector<int>> enumerate_cycles(const PlaneGraph& g, int max_len) {
    if (max_len > 8) throw LimitError("enumerate_cycles caps cycle length at 8");
    std::vector<std::vector<int>> out;
    if (max_len < 3) return out;
    std::vector<char> on_path(g.n() + 1, 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int s, int v) -> void {
        for (int u : g.neighbors(v)) {
            if (u == s && path.size() >= 3) {
                if (path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (u <= s || on_path[u]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            on_path[u] = 1;
            path.push_back(u);
            self(self, s, u);
            path.pop_back();
            on_path[u] = 0;
        }
    };
    for (int s = 1; s <= g.n(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff deleting V(c) leaves at least two connected components. The empty
// remainder counts as connected.
inline bool is_separating_cycle(const PlaneGraph& g, const std::vector<int>& c) {
    if (!is_cycle_of(g, c)) throw NotACycleError("not a cycle of the graph");
    std::vector<char> removed(g.n() + 1, 0);
    for (int v : c) removed[v] = 1;
    int start = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    if (start == 0) return false;
    std::vector<char> vis(g.n() + 1, 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (!removed[u] && !vis[u]) {
                vis[u] = 1;
                ++cnt;
                q.push(u);
            }
    }
    int remaining = g.n() - static_cast<int>(c.size());
    return cnt != remaining;
}

struct CycleReport {
    std::vector<std::array<int, 2>> chords;                   // edges between nonconsecutive cycle vertices
    std::vector<std::array<int, 3>> common_neighbor_triples;  // (x, y, v): xy not an edge, v off-cycle
};

// Chords of c plus, for every pair x,y on c that is nonadjacent in g, the
// common neighbors outside V(c).
inline CycleReport chords_and_common_neighbors(const PlaneGraph& g, const std::vector<int>& c) {
    if (!is_cycle_of(g, c)) throw NotACycleError("not a cycle of the graph");
    int r = static_cast<int>(c.size());
    std::vector<char> on_cycle(g.n() + 1, 0);
    std::vector<int> pos(g.n() + 1, -1);
    for (int i = 0; i < r; ++i) {
        on_cycle[c[i]] = 1;
        pos[c[i]] = i;
    }
    CycleReport rep;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            bool consecutive = (j - i == 1) || (i == 0 && j == r - 1);
            int x = std::min(c[i], c[j]), y = std::max(c[i], c[j]);
            if (!consecutive && g.adjacent(x, y)) rep.chords.push_back({x, y});
            if (!g.adjacent(x, y)) {
                for (int v = 1; v <= g.n(); ++v)
                    if (!on_cycle[v] && g.adjacent(v, x) && g.adjacent(v, y))
                        rep.common_neighbor_triples.push_back({x, y, v});
            }
        }
    std::sort(rep.chords.begin(), rep.chords.end());
    std::sort(rep.common_neighbor_triples.begin(), rep.common_neighbor_triples.end());
    return rep;
}

// New graph with the given vertices removed (embedding restricted), plus the
// old-id -> new-id map (0 for deleted vertices). Throws InvariantError if the
// remainder is disconnected or empty.
inline std::pair<PlaneGraph, std::vector<int>> delete_vertices(const PlaneGraph& g,
                                                               const std::vector<int>& del) {
    std::vector<char> gone(g.n() + 1, 0);
    for (int v : del) gone[v] = 1;
    std::vector<int> remap(g.n() + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (!gone[v]) remap[v] = ++next;
    if (next == 0) throw InvariantError("deletion removes every vertex");
    std::vector<std::vector<int>> rot(next + 1);
    for (int v = 1; v <= g.n(); ++v) {
        if (gone[v]) continue;
        for (int u : g.neighbors(v))
            if (!gone[u]) rot[remap[v]].push_back(remap[u]);
    }
    return {PlaneGraph::from_rotation(std::move(rot)), remap};
}

}  // namespace wb
