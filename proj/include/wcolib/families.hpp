#ifndef WCOLIB_FAMILIES_HPP
#define WCOLIB_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

struct RootedGraph {
    Graph graph;
    Vertex root = 0;
};

struct BuildRecipe {
    std::string family;
    std::map<std::string, long long> params;
    long long vertices = 0;
    long long edges = 0;
    std::optional<Vertex> root;
    std::map<std::string, Vertex> markers;
    bool scaled = false;  // a d_override replaced the faithful multiplicity
};

struct SizePrediction {
    long long vertices = 0;
    long long edges = 0;
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---- disjoint union and apex join ----------------------------------------

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.num_vertices() + b.num_vertices());
    for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.num_vertices();
    for (const auto& [u, v] : b.edges()) g.add_edge(u + off, v + off);
    g.finalize();
    return g;
}

// K_1 (+) g: apex gets label 0, g shifts by one; rooted at the apex.
inline RootedGraph apex_join(const Graph& g) {
    Graph out(g.num_vertices() + 1);
    for (Vertex v = 1; v <= g.num_vertices(); ++v) out.add_edge(0, v);
    for (const auto& [u, v] : g.edges()) out.add_edge(u + 1, v + 1);
    out.finalize();
    return {std::move(out), 0};
}

// ---- L_d gluing ------------------------------------------------------------

// L_d(B,H,u): a copy of B plus d copies of H per vertex x of B, each copy's
// root identified with x. Base vertices keep their labels; copy (x,i) occupies
// the next |V(H)|-1 labels, for x ascending and i in 0..d-1.
struct LComposeResult {
    Graph graph;
    std::vector<Vertex> base_map;                // V(b) -> result
    std::vector<std::vector<Vertex>> copy_maps;  // copy (x,i) at index x*d+i: V(h) -> result
};

inline LComposeResult l_compose(const Graph& b, const RootedGraph& h, long long d) {
    if (h.graph.null()) throw NullPiece();
    if (d < 1) throw BadParams("multiplicity must be positive");
    int nb = b.num_vertices();
    int nh = h.graph.num_vertices();
    long long total = static_cast<long long>(nb) * (1 + d * (nh - 1));
    if (total > std::numeric_limits<int>::max() / 2) throw SizeLimit("gluing too large");

    LComposeResult res;
    Graph g(static_cast<int>(total));
    res.base_map.resize(static_cast<size_t>(nb));
    for (Vertex x = 0; x < nb; ++x) res.base_map[static_cast<size_t>(x)] = x;
    for (const auto& [u, v] : b.edges()) g.add_edge(u, v);

    int next = nb;
    for (Vertex x = 0; x < nb; ++x) {
        for (long long i = 0; i < d; ++i) {
            std::vector<Vertex> map(static_cast<size_t>(nh));
            for (Vertex v = 0; v < nh; ++v)
                map[static_cast<size_t>(v)] = (v == h.root) ? x : next++;
            for (const auto& [u, v] : h.graph.edges())
                g.add_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
            res.copy_maps.push_back(std::move(map));
        }
    }
    g.finalize();
    res.graph = std::move(g);
    return res;
}

// ---- named families ---------------------------------------------------------

inline Graph complete_graph(int n) {
    if (n < 0) throw BadParams("kn");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.finalize();
    return g;
}

inline Graph complete_bipartite(int s, int t) {
    if (s < 0 || t < 0) throw BadParams("kst");
    Graph g(s + t);
    for (Vertex u = 0; u < s; ++u)
        for (Vertex v = s; v < s + t; ++v) g.add_edge(u, v);
    g.finalize();
    return g;
}

inline Graph path_graph(int n) {
    if (n < 0) throw BadParams("path");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.finalize();
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw BadParams("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    g.finalize();
    return g;
}

inline RootedGraph star_graph(int leaves) {
    if (leaves < 0) throw BadParams("star");
    return apex_join(Graph(leaves));
}

// ladder with k rungs: two rails of k vertices plus the k rungs
inline Graph ladder_graph(int k) {
    if (k < 1) throw BadParams("ladder");
    Graph g(2 * k);
    for (Vertex v = 0; v + 1 < k; ++v) {
        g.add_edge(v, v + 1);
        g.add_edge(k + v, k + v + 1);
    }
    for (Vertex v = 0; v < k; ++v) g.add_edge(v, k + v);
    g.finalize();
    return g;
}

inline Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw BadParams("grid");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    g.finalize();
    return g;
}

// F_{h,d}: complete d-ary tree of vertex-height h, BFS labels from the root.
inline RootedGraph dary_tree(int h, int d) {
    if (h < 1 || d < 1) throw BadParams("dary tree");
    long long total = 0, level = 1;
    for (int i = 0; i < h; ++i) {
        total += level;
        level *= d;
    }
    if (total > 1'000'000) throw SizeLimit("tree too large");
    Graph g(static_cast<int>(total));
    // children of BFS-labelled node v sit at v*d+1 .. v*d+d
    for (Vertex v = 0; v < static_cast<int>(total); ++v) {
        for (int i = 1; i <= d; ++i) {
            long long child = static_cast<long long>(v) * d + i;
            if (child < total) g.add_edge(v, static_cast<Vertex>(child));
        }
    }
    g.finalize();
    return {std::move(g), 0};
}

inline RootedGraph ternary_tree(int h) { return dary_tree(h, 3); }

inline Graph disjoint_copies(int k, const Graph& g) {
    if (k < 1) throw BadParams("copy count");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

// ---- the G_{r,t} family ------------------------------------------------------

struct GroheResult {
    Graph graph;
    BuildRecipe recipe;
};

inline SizePrediction predict_grohe(int r, int t, long long d_override = 0) {
    if (r < 0 || t < 0) throw BadParams("grohe");
    // v(r,t), e(r,t) via v = v(r-1,t) * (1 + d*(v(r,t-1))), with the apex copy
    // K_1 (+) G_{r,t-1} contributing v(r,t-1)+1 vertices and e + v edges.
    std::vector<std::vector<SizePrediction>> memo(static_cast<size_t>(r + 1),
                                                  std::vector<SizePrediction>(static_cast<size_t>(t + 1), {-1, -1}));
    auto rec = [&](auto&& self, int rr, int tt) -> SizePrediction {
        auto& slot = memo[static_cast<size_t>(rr)][static_cast<size_t>(tt)];
        if (slot.vertices >= 0) return slot;
        if (rr == 0 || tt == 0) return slot = {1, 0};
        SizePrediction base = self(self, rr - 1, tt);
        SizePrediction sub = self(self, rr, tt - 1);
        long long d = d_override > 0 ? d_override : binomial(rr + tt, tt);
        long long hv = sub.vertices + 1;                 // apex join
        long long he = sub.edges + sub.vertices;
        SizePrediction out;
        out.vertices = base.vertices * (1 + d * (hv - 1));
        out.edges = base.edges + d * base.vertices * he;
        if (out.vertices < 0 || out.vertices > (1LL << 40)) throw SizeLimit("grohe overflow");
        return slot = out;
    };
    return rec(rec, r, t);
}

inline GroheResult grohe_graph(int r, int t, long long d_override = 0,
                               long long size_cap = 2'000'000) {
    SizePrediction pred = predict_grohe(r, t, d_override);
    if (pred.vertices > size_cap)
        throw SizeLimit("G_{" + std::to_string(r) + "," + std::to_string(t) +
                        "} would have " + std::to_string(pred.vertices) + " vertices");
    std::vector<std::vector<std::optional<Graph>>> memo(
        static_cast<size_t>(r + 1), std::vector<std::optional<Graph>>(static_cast<size_t>(t + 1)));
    auto rec = [&](auto&& self, int rr, int tt) -> const Graph& {
        auto& slot = memo[static_cast<size_t>(rr)][static_cast<size_t>(tt)];
        if (slot) return *slot;
        if (rr == 0 || tt == 0) {
            slot = Graph(1);
            return *slot;
        }
        const Graph& base = self(self, rr - 1, tt);
        const Graph& sub = self(self, rr, tt - 1);
        long long d = d_override > 0 ? d_override : binomial(rr + tt, tt);
        slot = l_compose(base, apex_join(sub), d).graph;
        return *slot;
    };
    GroheResult res;
    res.graph = rec(rec, r, t);
    res.recipe.family = "grohe";
    res.recipe.params = {{"r", r}, {"t", t}};
    if (d_override > 0) {
        res.recipe.params["d_override"] = d_override;
        res.recipe.scaled = true;
    }
    res.recipe.vertices = pred.vertices;
    res.recipe.edges = pred.edges;
    if (res.graph.num_vertices() != pred.vertices || res.graph.num_edges() != pred.edges)
        throw Error("grohe size prediction mismatch");
    return res;
}

// ---- towers T_{h,d}(X) and T'_{h,d}(X) ---------------------------------------

inline SizePrediction predict_tower(const Graph& x, int h, long long d) {
    long long v1 = x.num_vertices() + 1;
    long long e1 = x.num_edges() + x.num_vertices();
    SizePrediction cur{v1, e1};
    for (int i = 2; i <= h; ++i) {
        cur.edges = e1 + d * v1 * cur.edges;
        cur.vertices = v1 * (1 + d * (cur.vertices - 1));
        if (cur.vertices > (1LL << 40)) throw SizeLimit("tower overflow");
    }
    return cur;
}

inline RootedGraph tower(const Graph& x, int h, int d, long long size_cap = 2'000'000) {
    if (h < 1 || d < 1) throw BadParams("tower");
    SizePrediction pred = predict_tower(x, h, d);
    if (pred.vertices > size_cap)
        throw SizeLimit("tower would have " + std::to_string(pred.vertices) + " vertices");
    RootedGraph cur = apex_join(x);  // T_{1,d}(X), root 0
    for (int i = 2; i <= h; ++i) {
        RootedGraph base = apex_join(x);
        auto glued = l_compose(base.graph, cur, d);
        cur = {std::move(glued.graph), base.root};
    }
    if (cur.graph.num_vertices() != pred.vertices || cur.graph.num_edges() != pred.edges)
        throw Error("tower size prediction mismatch");
    return cur;
}

// T'_{h,d}(X): two disjoint towers with their roots identified. The half maps
// trace each tower copy into the glued graph.
struct DoubleTower {
    Graph graph;
    Vertex root = 0;
    RootedGraph tower_pattern;         // one copy of T_{h,d}(X)
    std::vector<Vertex> half_a;        // V(tower) -> V(graph)
    std::vector<Vertex> half_b;
};

inline DoubleTower double_tower(const Graph& x, int h, int d, long long size_cap = 2'000'000) {
    RootedGraph t = tower(x, h, d, size_cap);
    int nt = t.graph.num_vertices();
    DoubleTower out;
    out.root = 0;
    Graph g(2 * nt - 1);
    out.half_a.resize(static_cast<size_t>(nt));
    out.half_b.resize(static_cast<size_t>(nt));
    int next = 1;
    for (Vertex v = 0; v < nt; ++v)
        out.half_a[static_cast<size_t>(v)] = (v == t.root) ? 0 : next++;
    for (Vertex v = 0; v < nt; ++v)
        out.half_b[static_cast<size_t>(v)] = (v == t.root) ? 0 : next++;
    for (const auto& [u, v] : t.graph.edges()) {
        g.add_edge(out.half_a[static_cast<size_t>(u)], out.half_a[static_cast<size_t>(v)]);
        g.add_edge(out.half_b[static_cast<size_t>(u)], out.half_b[static_cast<size_t>(v)]);
    }
    g.finalize();
    out.graph = std::move(g);
    out.tower_pattern = std::move(t);
    return out;
}

// ---- the H_{k,l} gadget -------------------------------------------------------

struct GadgetHkl {
    Graph graph;
    Vertex u = 0;
    Vertex v = 0;
};

inline SizePrediction predict_hkl(int k, int l) {
    SizePrediction cur{l, l - 1};
    for (int i = 3; i <= k; ++i) {
        long long av = cur.vertices + 1, ae = cur.edges + cur.vertices;  // apex join
        cur = {2 * av - 1, 2 * ae};
        if (cur.vertices > (1LL << 40)) throw SizeLimit("gadget overflow");
    }
    return cur;
}

// H_{2,l} is a path on l vertices with its endpoints marked. H_{k,l} glues two
// apex-joined copies of H_{k-1,l}, identifying the v marker of the first with
// the u marker of the second.
inline GadgetHkl gadget_hkl(int k, int l, long long size_cap = 2'000'000) {
    if (k < 2 || l < 2) throw BadParams("gadget needs k,l >= 2");
    if (predict_hkl(k, l).vertices > size_cap) throw SizeLimit("gadget too large");
    GadgetHkl cur{path_graph(l), 0, l - 1};
    for (int i = 3; i <= k; ++i) {
        RootedGraph h1 = apex_join(cur.graph);  // prev vertex w -> w+1
        int n1 = h1.graph.num_vertices();
        Vertex glue1 = cur.v + 1;  // copy of v_{k-1,l} in H_1
        // H_2 vertices map: apex -> n1, body w -> n1 + 1 + w, except u_{k-1,l}
        // which is identified with glue1.
        Vertex u2 = cur.u;
        auto map2 = [&](Vertex w) -> Vertex {
            if (w == u2 + 1) return glue1;  // +1 for the apex shift inside H_2
            Vertex base = n1 + w;
            return w > u2 + 1 ? base - 1 : base;
        };
        Graph g(2 * n1 - 1);
        for (const auto& [a, b] : h1.graph.edges()) g.add_edge(a, b);
        for (const auto& [a, b] : h1.graph.edges()) g.add_edge(map2(a), map2(b));
        g.finalize();
        GadgetHkl next;
        next.graph = std::move(g);
        next.u = cur.u + 1;         // copy of u_{k-1,l} in H_1
        next.v = map2(cur.v + 1);   // copy of v_{k-1,l} in H_2
        cur = std::move(next);
    }
    return cur;
}

// ---- size prediction over recipes ---------------------------------------------

inline SizePrediction predict_size(const BuildRecipe& recipe) {
    auto p = [&](const std::string& key) -> long long {
        auto it = recipe.params.find(key);
        if (it == recipe.params.end()) throw BadParams("missing param " + key);
        return it->second;
    };
    const std::string& f = recipe.family;
    if (f == "kn") {
        long long n = p("n");
        return {n, n * (n - 1) / 2};
    }
    if (f == "kst") {
        long long s = p("s"), t = p("t");
        return {s + t, s * t};
    }
    if (f == "path") {
        long long n = p("n");
        return {n, std::max<long long>(0, n - 1)};
    }
    if (f == "cycle") {
        long long n = p("n");
        return {n, n};
    }
    if (f == "star") {
        long long d = p("leaves");
        return {d + 1, d};
    }
    if (f == "ladder") {
        long long k = p("k");
        return {2 * k, 3 * k - 2};
    }
    if (f == "grid") {
        long long r = p("rows"), c = p("cols");
        return {r * c, r * (c - 1) + c * (r - 1)};
    }
    if (f == "dary" || f == "ternary") {
        long long h = p("h"), d = f == "ternary" ? 3 : p("d");
        long long total = 0, level = 1;
        for (long long i = 0; i < h; ++i) {
            total += level;
            level *= d;
        }
        return {total, total - 1};
    }
    if (f == "grohe") {
        long long d = recipe.params.count("d_override") ? recipe.params.at("d_override") : 0;
        return predict_grohe(static_cast<int>(p("r")), static_cast<int>(p("t")), d);
    }
    if (f == "hkl") return predict_hkl(static_cast<int>(p("k")), static_cast<int>(p("l")));
    throw BadParams("unknown family " + f);
}

}  // namespace wcolib

#endif  // WCOLIB_FAMILIES_HPP
