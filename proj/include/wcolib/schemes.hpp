#ifndef WCOLIB_SCHEMES_HPP
#define WCOLIB_SCHEMES_HPP

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "wcolib/graph.hpp"
#include "wcolib/ordering.hpp"
#include "wcolib/structures.hpp"

namespace wcolib {

inline int ceil_log2(int x) {
    if (x <= 1) return 0;
    int s = 0;
    int p = 1;
    while (p < x) {
        p *= 2;
        ++s;
    }
    return s;
}

// Elimination ordering of a tree rooted at s: s first, and every later vertex
// has exactly its parent among the already placed vertices. BFS order from the
// root realizes one. Under such an ordering a vertex weakly reaches only its
// ancestors within distance r, so the evaluated wcol_r is at most r+1.
inline Ordering elimination_ordering(const Graph& t, Vertex s) {
    if (!is_tree(t)) throw NotATree();
    if (s < 0 || s >= t.num_vertices()) throw RootOutOfRange();
    Ordering o;
    o.scope = all_vertices(t);
    std::vector<char> seen(static_cast<size_t>(t.num_vertices()), 0);
    std::queue<Vertex> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        o.sequence.push_back(u);
        for (Vertex w : t.neighbors(u)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                q.push(w);
            }
        }
    }
    if (o.sequence.size() != static_cast<size_t>(t.num_vertices())) throw NotConnected();
    return o;
}

// Dyadic ordering of a path p_1..p_n (positions counted from 1): with
// s = ceil(log2 r) by default, position i gets level = largest j <= s with
// i = 0 mod 2^j; the ordering lists levels descending, positions ascending
// within a level. Evaluated wcol_r is at most 2+s.
inline Ordering dyadic_path_ordering(const Graph& p, int r, int s_override = -1) {
    if (r < 1) throw RadiusZero();
    std::vector<Vertex> seq = path_sequence(p);
    if (seq.empty()) throw NotAPath();
    int s = s_override >= 0 ? s_override : ceil_log2(r);
    int n = static_cast<int>(seq.size());
    std::vector<int> level(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int j = 0;
        while (j < s && i % (1 << (j + 1)) == 0) ++j;
        level[static_cast<size_t>(i - 1)] = j;
    }
    Ordering o;
    o.scope = all_vertices(p);
    for (int lev = s; lev >= 0; --lev)
        for (int i = 0; i < n; ++i)
            if (level[static_cast<size_t>(i)] == lev) o.sequence.push_back(seq[static_cast<size_t>(i)]);
    return o;
}

// Pathwidth-driven ordering: take a geodesic Q from the first bag to the last
// bag, place V(Q) first, and recurse on g - V(Q), whose pathwidth drops by at
// least one (Q meets every bag). The evaluated wcol_r is at most
// 1 + width(pd) * (2r+1).
inline Ordering pathwidth_ordering(const Graph& g, const PathDecomposition& pd, int r) {
    (void)r;  // the radius only enters the bound, not the construction
    if (!validate_path_decomposition(g, pd).valid) throw InvalidDecomposition();
    Ordering o;
    o.scope = all_vertices(g);
    if (g.null()) return o;

    struct Frame {
        Graph graph;
        PathDecomposition pd;
        std::vector<Vertex> to_orig;  // local vertex -> original vertex
    };
    std::vector<Frame> stack;
    std::vector<Vertex> ident(static_cast<size_t>(g.num_vertices()));
    for (int i = 0; i < g.num_vertices(); ++i) ident[static_cast<size_t>(i)] = i;
    stack.push_back({g, pd, ident});

    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.graph.null()) continue;
        if (f.graph.num_edges() == 0) {
            for (Vertex v = 0; v < f.graph.num_vertices(); ++v)
                o.sequence.push_back(f.to_orig[static_cast<size_t>(v)]);
            continue;
        }
        if (!is_connected(f.graph)) {
            // per-component recursion, components by smallest vertex
            auto comps = components(f.graph);
            for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
                auto sub = induced_subgraph(f.graph, *it);
                PathDecomposition spd;
                for (const auto& bag : f.pd.bags) {
                    VertexSet nb;
                    for (Vertex v : bag) {
                        Vertex nv = sub.to_new[static_cast<size_t>(v)];
                        if (nv >= 0) nb.push_back(nv);
                    }
                    if (!nb.empty()) spd.bags.push_back(sorted_unique(std::move(nb)));
                }
                if (spd.bags.empty()) spd.bags.push_back({});
                std::vector<Vertex> map(sub.to_old.size());
                for (size_t i = 0; i < sub.to_old.size(); ++i)
                    map[i] = f.to_orig[static_cast<size_t>(sub.to_old[i])];
                stack.push_back({std::move(sub.graph), std::move(spd), std::move(map)});
            }
            continue;
        }
        // nonempty first/last bags for the geodesic endpoints
        size_t first = 0, last = f.pd.bags.size() - 1;
        while (first < f.pd.bags.size() && f.pd.bags[first].empty()) ++first;
        while (last > 0 && f.pd.bags[last].empty()) --last;
        auto q = geodesic(f.graph, f.pd.bags[first], f.pd.bags[last]);
        if (q.empty()) throw InvalidDecomposition("no path across the decomposition");
        for (Vertex v : q) o.sequence.push_back(f.to_orig[static_cast<size_t>(v)]);
        auto rest = remove_vertices(f.graph, VertexSet(q.begin(), q.end()));
        PathDecomposition rpd;
        for (const auto& bag : f.pd.bags) {
            VertexSet nb;
            for (Vertex v : bag) {
                Vertex nv = rest.to_new[static_cast<size_t>(v)];
                if (nv >= 0) nb.push_back(nv);
            }
            rpd.bags.push_back(sorted_unique(std::move(nb)));
        }
        std::vector<Vertex> map(rest.to_old.size());
        for (size_t i = 0; i < rest.to_old.size(); ++i)
            map[i] = f.to_orig[static_cast<size_t>(rest.to_old[i])];
        stack.push_back({std::move(rest.graph), std::move(rpd), std::move(map)});
    }
    return o;
}

// Concatenate prefix segments (sets or geodesic sequences, in the given order)
// before a base ordering; vertices already placed by an earlier segment are
// skipped. Scope of the result is the union.
inline Ordering prepend_sets(const Graph& g, const Ordering& base,
                             const std::vector<std::vector<Vertex>>& prefixes) {
    std::vector<char> placed(static_cast<size_t>(g.num_vertices()), 0);
    Ordering o;
    auto put = [&](Vertex v) {
        g.check_vertex(v);
        if (!placed[static_cast<size_t>(v)]) {
            placed[static_cast<size_t>(v)] = 1;
            o.sequence.push_back(v);
        }
    };
    for (const auto& seg : prefixes)
        for (Vertex v : seg) put(v);
    for (Vertex v : base.sequence) put(v);
    o.scope = sorted_unique(o.sequence);
    return o;
}

}  // namespace wcolib

#endif  // WCOLIB_SCHEMES_HPP
