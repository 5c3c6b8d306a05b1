#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "workbench/plane_graph.hpp"

namespace wb {

// Impropriety caps (c1,...,ck): color class i may induce maximum degree c_i.
struct ColorSpec {
    std::vector<int> caps;

    ColorSpec() = default;
    ColorSpec(std::initializer_list<int> c) : caps(c) { validate(); }
    explicit ColorSpec(std::vector<int> c) : caps(std::move(c)) { validate(); }

    int k() const { return static_cast<int>(caps.size()); }

    void validate() const {
        if (caps.empty()) throw InvariantError("color spec needs at least one color");
        if (caps.size() > 31) throw LimitError("at most 31 colors supported");
        for (int c : caps)
            if (c < 0) throw InvariantError("impropriety caps must be nonnegative");
    }
};

inline ColorSpec spec_200() { return ColorSpec{2, 0, 0}; }

// Partial vertex -> color assignment; 0 means uncolored, colors are 1..k.
struct Coloring {
    std::vector<int> assignment;  // 1-based, index 0 unused

    static Coloring empty(int n) {
        Coloring c;
        c.assignment.assign(n + 1, 0);
        return c;
    }

    int color(int v) const { return assignment[v]; }
    bool colored(int v) const { return assignment[v] != 0; }

    bool total(int n) const {
        for (int v = 1; v <= n; ++v)
            if (!assignment[v]) return false;
        return true;
    }
};

struct VerifyVerdict {
    bool valid = false;
    std::vector<int> violators;
};

inline bool valid_partial(const PlaneGraph& g, const ColorSpec& spec, const Coloring& col) {
    for (int v = 1; v <= g.n(); ++v) {
        int c = col.color(v);
        if (!c) continue;
        if (c < 1 || c > spec.k()) return false;
        int same = 0;
        for (int u : g.neighbors(v))
            if (col.color(u) == c) ++same;
        if (same > spec.caps[c - 1]) return false;
    }
    return true;
}

// Total-coloring check: vertex colored i may have at most c_i neighbors of
// color i; the verdict lists every violating vertex.
inline VerifyVerdict verify(const PlaneGraph& g, const ColorSpec& spec, const Coloring& col) {
    if (!col.total(g.n())) throw PartialColoringError("verify requires a total coloring");
    VerifyVerdict v;
    for (int x = 1; x <= g.n(); ++x) {
        int c = col.color(x);
        if (c < 1 || c > spec.k()) {
            v.violators.push_back(x);
            continue;
        }
        int same = 0;
        for (int u : g.neighbors(x))
            if (col.color(u) == c) ++same;
        if (same > spec.caps[c - 1]) v.violators.push_back(x);
    }
    v.valid = v.violators.empty();
    return v;
}

// The superextension side condition: every cycle vertex's neighbors off the
// cycle carry a different color.
inline bool satisfies_superextension(const PlaneGraph& g, const std::vector<int>& cycle,
                                     const Coloring& col) {
    std::vector<char> on(g.n() + 1, 0);
    for (int v : cycle) on[v] = 1;
    for (int w : cycle)
        for (int u : g.neighbors(w))
            if (!on[u] && col.colored(u) && col.color(u) == col.color(w)) return false;
    return true;
}

struct SolveOptions {
    bool symmetry_reduction = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveResult {
    bool sat = false;
    Coloring coloring;
    long long nodes = 0;
};

namespace detail {

// Deterministic exact search: uncolored vertices in ascending id order,
// colors in ascending order, with cap propagation (a vertex saturated at
// cap c_i forbids color i on its uncolored neighbors). `forbidden` is a
// per-vertex color bitmask used by the superextension constraint.
class Solver {
  public:
    Solver(const PlaneGraph& g, const ColorSpec& spec, Coloring start,
           std::vector<unsigned> forbidden, SolveOptions opt)
        : g_(g), spec_(spec), col_(std::move(start)), forbidden_(std::move(forbidden)), opt_(opt) {
        if (forbidden_.empty()) forbidden_.assign(g.n() + 1, 0);
        cnt_.assign(static_cast<size_t>(g.n() + 1) * (spec.k() + 1), 0);
        for (int v = 1; v <= g.n(); ++v) {
            int c = col_.color(v);
            if (c) {
                for (int u : g_.neighbors(v)) ++cnt(u, c);
            }
        }
        for (int v = 1; v <= g.n(); ++v)
            if (!col_.colored(v)) order_.push_back(v);
        if (opt_.symmetry_reduction) {
            for (int v = 1; v <= g.n(); ++v)
                if (int c = col_.color(v)) used_[c] = true;
        }
    }

    // First solution in the deterministic order, or UNSAT.
    SolveResult run() {
        SolveResult r;
        r.sat = dfs(0, [&](const Coloring& c) {
            r.coloring = c;
            return true;
        });
        r.nodes = nodes_;
        return r;
    }

    // All solutions, in the deterministic order.
    std::vector<Coloring> run_all() {
        std::vector<Coloring> all;
        dfs(0, [&](const Coloring& c) {
            all.push_back(c);
            return false;
        });
        return all;
    }

    long long nodes() const { return nodes_; }

  private:
    int& cnt(int v, int c) { return cnt_[static_cast<size_t>(v) * (spec_.k() + 1) + c]; }

    bool color_ok(int u, int c) {
        if (forbidden_[u] & (1u << c)) return false;
        if (cnt(u, c) > spec_.caps[c - 1]) return false;
        for (int w : g_.neighbors(u))
            if (col_.color(w) == c && cnt(w, c) >= spec_.caps[c - 1]) return false;
        return true;
    }

    template <typename OnSolution>
    bool dfs(size_t depth, const OnSolution& on_solution) {
        if (depth == order_.size()) return on_solution(col_);
        if (opt_.deadline && (++ticks_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > *opt_.deadline)
            throw TimeoutError("solve deadline exceeded");
        int u = order_[depth];
        for (int c = 1; c <= spec_.k(); ++c) {
            if (opt_.symmetry_reduction && !used_[c] && !first_unused_of_class(c)) continue;
            if (!color_ok(u, c)) continue;
            ++nodes_;
            bool was_used = used_[c];
            used_[c] = true;
            col_.assignment[u] = c;
            for (int w : g_.neighbors(u)) ++cnt(w, c);
            bool done = dfs(depth + 1, on_solution);
            for (int w : g_.neighbors(u)) --cnt(w, c);
            col_.assignment[u] = 0;
            used_[c] = was_used;
            if (done) return true;
        }
        return false;
    }

    // Colors with equal caps are interchangeable; among the unused ones of a
    // cap class only the smallest may be opened.
    bool first_unused_of_class(int c) {
        for (int d = 1; d < c; ++d)
            if (!used_[d] && spec_.caps[d - 1] == spec_.caps[c - 1]) return false;
        return true;
    }

    const PlaneGraph& g_;
    ColorSpec spec_;
    Coloring col_;
    std::vector<unsigned> forbidden_;
    SolveOptions opt_;
    std::vector<int> cnt_;
    std::vector<int> order_;
    long long nodes_ = 0;
    unsigned ticks_ = 0;
    bool used_[33] = {};
};

}  // namespace detail

// Total extension of `partial` passing verify, or UNSAT by exhaustion.
inline SolveResult solve(const PlaneGraph& g, const ColorSpec& spec, const Coloring& partial,
                         SolveOptions opt = {}) {
    if (static_cast<int>(partial.assignment.size()) != g.n() + 1)
        throw PreconditionError("partial coloring sized for a different graph");
    if (!valid_partial(g, spec, partial))
        throw PreconditionError("partial coloring violates the caps");
    return detail::Solver(g, spec, partial, {}, opt).run();
}

inline SolveResult solve(const PlaneGraph& g, const ColorSpec& spec, SolveOptions opt = {}) {
    return solve(g, spec, Coloring::empty(g.n()), opt);
}

// Every total valid coloring, deterministic order. Guarded to n <= 12.
inline std::vector<Coloring> enumerate_all(const PlaneGraph& g, const ColorSpec& spec,
                                           SolveOptions opt = {}) {
    if (g.n() > 12) throw LimitError("enumerate_all is guarded to n <= 12");
    return detail::Solver(g, spec, Coloring::empty(g.n()), {}, opt).run_all();
}

// ---------------------------------------------------------------------------
// Superextension.

// Extends a total precoloring of V(cycle) to all of g under (2,0,0)-caps (or
// the given spec) such that every off-cycle neighbor of a cycle vertex gets a
// different color; UNSAT is by exhaustion.
inline SolveResult superextend(const PlaneGraph& g, const std::vector<int>& cycle,
                               const Coloring& precol, const ColorSpec& spec = spec_200(),
                               SolveOptions opt = {}) {
    if (!is_cycle_of(g, cycle)) throw NotACycleError("superextend requires a cycle of the graph");
    std::vector<char> on(g.n() + 1, 0);
    for (int v : cycle) on[v] = 1;
    for (int v : cycle)
        if (!precol.colored(v))
            throw InvalidPrecoloringError("precoloring must be total on the cycle");
    for (int v = 1; v <= g.n(); ++v)
        if (!on[v] && precol.colored(v))
            throw InvalidPrecoloringError("precoloring colors a vertex off the cycle");
    // validity within the induced subgraph G[V(C)]
    for (int v : cycle) {
        int c = precol.color(v);
        if (c < 1 || c > spec.k()) throw InvalidPrecoloringError("precoloring color out of range");
        int same = 0;
        for (int u : g.neighbors(v))
            if (on[u] && precol.color(u) == c) ++same;
        if (same > spec.caps[c - 1])
            throw InvalidPrecoloringError("precoloring violates the caps on G[C]");
    }
    std::vector<unsigned> forbidden(g.n() + 1, 0);
    for (int w : cycle)
        for (int u : g.neighbors(w))
            if (!on[u]) forbidden[u] |= 1u << precol.color(w);
    SolveOptions o = opt;
    o.symmetry_reduction = false;  // precoloring breaks color symmetry
    return detail::Solver(g, spec, precol, std::move(forbidden), o).run();
}

struct SuperextendVerdict {
    bool superextendable = false;
    std::optional<Coloring> failing_precoloring;
    long long precolorings = 0;
};

// True iff every valid (2,0,0)-coloring of G[V(cycle)] superextends to g;
// carries the first failing precoloring otherwise.
inline SuperextendVerdict is_superextendable(const PlaneGraph& g, const std::vector<int>& cycle,
                                             SolveOptions opt = {}) {
    if (!is_cycle_of(g, cycle)) throw NotACycleError("not a cycle of the graph");
    std::vector<int> rest;
    std::vector<char> on(g.n() + 1, 0);
    for (int v : cycle) on[v] = 1;
    for (int v = 1; v <= g.n(); ++v)
        if (!on[v]) rest.push_back(v);

    SuperextendVerdict verdict;
    if (rest.empty()) {
        verdict.superextendable = true;  // nothing to extend
        return verdict;
    }
    auto [sub, remap] = delete_vertices(g, rest);
    std::vector<int> back(sub.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v)
        if (remap[v]) back[remap[v]] = v;

    for (const Coloring& mini : enumerate_all(sub, spec_200())) {
        ++verdict.precolorings;
        Coloring pre = Coloring::empty(g.n());
        for (int s = 1; s <= sub.n(); ++s) pre.assignment[back[s]] = mini.color(s);
        SolveResult r = superextend(g, cycle, pre, spec_200(), opt);
        if (!r.sat) {
            verdict.failing_precoloring = pre;
            return verdict;
        }
    }
    verdict.superextendable = true;
    return verdict;
}

// ---------------------------------------------------------------------------
// Local recoloring machinery.

enum class Saturation { one_saturated, nicely_colored };

// A vertex is 1-saturated when it carries color 1 and has two (or more)
// neighbors of color 1; everything else counts as nicely colored.
inline Saturation saturation_status(const PlaneGraph& g, const Coloring& col, int v) {
    if (!col.colored(v)) throw UncoloredError("vertex is uncolored");
    if (col.color(v) != 1) return Saturation::nicely_colored;
    int ones = 0;
    for (int u : g.neighbors(v))
        if (col.color(u) == 1) ++ones;
    return ones >= 2 ? Saturation::one_saturated : Saturation::nicely_colored;
}

// Nicely recoloring v: give it color 2 or 3 when one of those is absent from
// its colored neighborhood, otherwise keep/assign color 1 provided at most
// one neighbor has color 1. Requires at most three colored neighbors.
inline std::optional<Coloring> nicely_recolor(const PlaneGraph& g, const Coloring& col, int v) {
    int colored = 0, ones = 0;
    bool has2 = false, has3 = false;
    for (int u : g.neighbors(v)) {
        int c = col.color(u);
        if (!c) continue;
        ++colored;
        if (c == 1) ++ones;
        if (c == 2) has2 = true;
        if (c == 3) has3 = true;
    }
    if (colored > 3) throw TooManyColoredNeighborsError("nicely_recolor needs <= 3 colored neighbors");
    Coloring out = col;
    if (!has2) {
        out.assignment[v] = 2;
        return out;
    }
    if (!has3) {
        out.assignment[v] = 3;
        return out;
    }
    if ((col.color(v) == 1 || !col.colored(v)) && ones <= 1) {
        out.assignment[v] = 1;
        return out;
    }
    return std::nullopt;
}

namespace detail {

inline bool proper_colors_at(const PlaneGraph& g, const Coloring& col, int v,
                             std::vector<int>& out) {
    out.clear();
    bool seen[4] = {};
    for (int u : g.neighbors(v)) {
        int c = col.color(u);
        if (c >= 1 && c <= 3) seen[c] = true;
    }
    for (int c = 1; c <= 3; ++c)
        if (!seen[c]) out.push_back(c);
    return !out.empty();
}

}  // namespace detail

// Executable form of the two-colored-neighbor recoloring step: true iff
// col(v)=1 can be reached directly or through the permitted cascade (proper
// recoloring of a color-1 v_i; or uncolor v_j, properly recolor v_i then
// v_j) while the partial coloring stays valid under (2,0,0).
// Requires v internal with exactly two colored neighbors, both internal.
inline bool recolor_with_one_feasible(const PlaneGraph& g, const Coloring& col, int v) {
    if (!g.has_outer()) throw NoOuterCycleError("needs an outer cycle to tell int(C)");
    if (g.on_outer(v)) throw PreconditionError("v must lie in int(C)");
    std::vector<int> colored_nbrs;
    for (int u : g.neighbors(v))
        if (col.colored(u)) colored_nbrs.push_back(u);
    if (colored_nbrs.size() != 2)
        throw PreconditionError("v must have exactly two colored neighbors");
    for (int u : colored_nbrs)
        if (g.on_outer(u)) throw PreconditionError("colored neighbors must lie in int(C)");

    const ColorSpec spec = spec_200();
    auto attempt = [&](Coloring c) {
        c.assignment[v] = 1;
        return valid_partial(g, spec, c);
    };
    if (attempt(col)) return true;

    std::vector<int> free;
    for (int pick = 0; pick < 2; ++pick) {
        int vi = colored_nbrs[pick];
        int vj = colored_nbrs[1 - pick];
        // properly recolor v_i when it carries color 1
        if (col.color(vi) == 1) {
            Coloring base = col;
            base.assignment[vi] = 0;
            detail::proper_colors_at(g, base, vi, free);
            for (int c : free) {
                if (c == 1) continue;  // recolor means leaving color 1
                Coloring cand = base;
                cand.assignment[vi] = c;
                if (attempt(cand)) return true;
            }
        }
        // uncolor v_j (colored 2 or 3), properly recolor v_i then v_j
        if (col.color(vj) == 2 || col.color(vj) == 3) {
            Coloring base = col;
            base.assignment[vj] = 0;
            base.assignment[vi] = 0;
            std::vector<int> fi;
            detail::proper_colors_at(g, base, vi, fi);
            for (int ci : fi) {
                Coloring mid = base;
                mid.assignment[vi] = ci;
                detail::proper_colors_at(g, mid, vj, free);
                for (int cj : free) {
                    Coloring cand = mid;
                    cand.assignment[vj] = cj;
                    if (attempt(cand)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace wb
