#ifndef WCOLIB_GRAPH_HPP
#define WCOLIB_GRAPH_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcolib {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // kept sorted unless noted

constexpr int kInfDist = std::numeric_limits<int>::max();

// ---- typed errors ------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WCOLIB_ERROR(Name)                                              \
    struct Name : Error {                                               \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

WCOLIB_ERROR(NotConnected);
WCOLIB_ERROR(NotATree);
WCOLIB_ERROR(NotAPath);
WCOLIB_ERROR(VertexOutOfRange);
WCOLIB_ERROR(RootOutOfRange);
WCOLIB_ERROR(EmptyEndpointSet);
WCOLIB_ERROR(NotAPartition);
WCOLIB_ERROR(NullGraph);
WCOLIB_ERROR(ScopeMismatch);
WCOLIB_ERROR(DuplicateEdge);
WCOLIB_ERROR(LoopEdge);
WCOLIB_ERROR(SizeLimit);
WCOLIB_ERROR(BadParams);
WCOLIB_ERROR(RadiusZero);
WCOLIB_ERROR(InvalidDecomposition);
WCOLIB_ERROR(InvalidModel);
WCOLIB_ERROR(NoEdge);
WCOLIB_ERROR(NullPiece);
WCOLIB_ERROR(UnknownSuite);
WCOLIB_ERROR(UnknownTarget);
WCOLIB_ERROR(TooFewPoints);

struct SyntaxError : Error {
    int line;
    SyntaxError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
};

#undef WCOLIB_ERROR

// ---- graph -------------------------------------------------------------

// Simple undirected graph over vertices 0..n-1. The null graph (n == 0) is
// legal. Edges are stored normalized (u < v) and sorted; adjacency lists are
// sorted, so every traversal below is deterministic.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
        if (n < 0) throw BadParams("negative vertex count");
    }

    Graph(int n, std::vector<Edge> edges) : Graph(n) {
        for (auto& e : edges) add_edge(e.first, e.second);
        finalize();
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool null() const { return n_ == 0; }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw LoopEdge("loop edge " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
        finalized_ = false;
    }

    // Sorts adjacency and rejects parallel edges. Constructors call this;
    // call it manually after a sequence of add_edge.
    void finalize() {
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw DuplicateEdge();
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        finalized_ = true;
    }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<Vertex>& neighbors(Vertex u) const {
        check_vertex(u);
        return adj_[static_cast<size_t>(u)];
    }

    int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    void check_vertex(Vertex u) const {
        if (u < 0 || u >= n_)
            throw VertexOutOfRange("vertex " + std::to_string(u) + " not in 0.." +
                                   std::to_string(n_ - 1));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    bool finalized_ = true;
};

// ---- vertex-set helpers --------------------------------------------------

inline VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    return set_intersection(a, b).empty();
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet all_vertices(const Graph& g) {
    VertexSet s(static_cast<size_t>(g.num_vertices()));
    for (int i = 0; i < g.num_vertices(); ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

// ---- basic traversals ----------------------------------------------------

// Connected components as sorted vertex sets, ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.null()) return false;  // connected graphs are nonnull
    return components(g).size() == 1;
}

// BFS distances from a set of sources; unreachable = kInfDist.
inline std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources) {
    std::vector<int> dist(static_cast<size_t>(g.num_vertices()), kInfDist);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        g.check_vertex(s);
        if (dist[static_cast<size_t>(s)] == 0) continue;
        dist[static_cast<size_t>(s)] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kInfDist) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
    return bfs_distances(g, {u})[static_cast<size_t>(v)];
}

// N^r[u]: all vertices at distance <= r, sorted.
inline VertexSet ball(const Graph& g, Vertex u, int r) {
    g.check_vertex(u);
    if (r < 0) throw BadParams("negative radius");
    auto dist = bfs_distances(g, {u});
    VertexSet out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (dist[static_cast<size_t>(v)] <= r) out.push_back(v);
    return out;
}

// ---- induced subgraphs with explicit vertex maps --------------------------

struct SubgraphResult {
    Graph graph;
    std::vector<Vertex> to_old;  // new vertex -> old vertex
    std::vector<Vertex> to_new;  // old vertex -> new vertex, -1 if dropped
};

inline SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep_in) {
    VertexSet keep = sorted_unique(keep_in);
    for (Vertex v : keep) g.check_vertex(v);
    SubgraphResult res;
    res.to_new.assign(static_cast<size_t>(g.num_vertices()), -1);
    res.to_old = keep;
    for (size_t i = 0; i < keep.size(); ++i)
        res.to_new[static_cast<size_t>(keep[i])] = static_cast<Vertex>(i);
    Graph h(static_cast<int>(keep.size()));
    for (const auto& [u, v] : g.edges()) {
        Vertex nu = res.to_new[static_cast<size_t>(u)];
        Vertex nv = res.to_new[static_cast<size_t>(v)];
        if (nu >= 0 && nv >= 0) h.add_edge(nu, nv);
    }
    h.finalize();
    res.graph = std::move(h);
    return res;
}

inline SubgraphResult remove_vertices(const Graph& g, const VertexSet& drop) {
    return induced_subgraph(g, set_difference(all_vertices(g), sorted_unique(drop)));
}

// G / P: one vertex per cell, cells adjacent iff some cross edge exists.
// `parts` must partition V(g) into nonempty cells.
inline Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
    std::vector<int> cell(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw NotAPartition("empty cell");
        for (Vertex v : parts[i]) {
            g.check_vertex(v);
            if (cell[static_cast<size_t>(v)] != -1) throw NotAPartition("overlapping cells");
            cell[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (cell[static_cast<size_t>(v)] == -1)
            throw NotAPartition("vertex " + std::to_string(v) + " uncovered");
    std::vector<Edge> qedges;
    for (const auto& [u, v] : g.edges()) {
        int cu = cell[static_cast<size_t>(u)], cv = cell[static_cast<size_t>(v)];
        if (cu != cv) qedges.emplace_back(std::min(cu, cv), std::max(cu, cv));
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    return Graph(static_cast<int>(parts.size()), std::move(qedges));
}

// ---- X-Y geodesics ---------------------------------------------------------

// Shortest X-Y path: a one-vertex path when X and Y meet, otherwise a shortest
// path from X to Y with no internal vertex in X u Y. Among the shortest such
// paths the lexicographically smallest vertex sequence is returned. Such a
// path is always a geodesic between its endpoints. Returns empty when no X-Y
// path exists.
inline std::vector<Vertex> geodesic(const Graph& g, const VertexSet& from_in,
                                    const VertexSet& to_in) {
    VertexSet X = sorted_unique(from_in), Y = sorted_unique(to_in);
    if (X.empty() || Y.empty()) throw EmptyEndpointSet();
    for (Vertex v : X) g.check_vertex(v);
    for (Vertex v : Y) g.check_vertex(v);

    VertexSet meet = set_intersection(X, Y);
    if (!meet.empty()) return {meet.front()};

    VertexSet XY = set_union(X, Y);
    // distY[v]: length of a shortest v -> Y path whose internal vertices avoid
    // X u Y. Expansion passes through v only when v is a legal internal vertex.
    std::vector<int> distY(static_cast<size_t>(g.num_vertices()), kInfDist);
    std::queue<Vertex> q;
    for (Vertex y : Y) {
        distY[static_cast<size_t>(y)] = 0;
        q.push(y);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        bool passable = distY[static_cast<size_t>(v)] == 0 || !set_contains(XY, v);
        if (!passable) continue;
        for (Vertex w : g.neighbors(v)) {
            if (distY[static_cast<size_t>(w)] == kInfDist) {
                distY[static_cast<size_t>(w)] = distY[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
        }
    }

    int best = kInfDist;
    for (Vertex x : X) best = std::min(best, distY[static_cast<size_t>(x)]);
    if (best == kInfDist) return {};

    // Greedy lexicographically smallest reconstruction.
    std::vector<Vertex> path;
    Vertex cur = -1;
    for (Vertex x : X) {
        if (distY[static_cast<size_t>(x)] == best) {
            cur = x;
            break;
        }
    }
    path.push_back(cur);
    int remaining = best;
    while (remaining > 0) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (distY[static_cast<size_t>(w)] != remaining - 1) continue;
            bool terminal = remaining - 1 == 0;
            if (terminal) {
                if (!set_contains(Y, w)) continue;
            } else {
                if (set_contains(XY, w)) continue;
            }
            next = w;
            break;  // neighbors sorted: first hit is smallest
        }
        path.push_back(next);
        cur = next;
        --remaining;
    }
    return path;
}

// A path is a geodesic iff its length equals the distance of its endpoints.
inline bool is_geodesic(const Graph& g, const std::vector<Vertex>& path) {
    if (path.empty()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    VertexSet uniq(path.begin(), path.end());
    if (sorted_unique(uniq).size() != path.size()) return false;
    return distance(g, path.front(), path.back()) == static_cast<int>(path.size()) - 1;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.num_edges() == g.num_vertices() - 1;
}

// A path graph: tree with max degree <= 2. Returns the end-to-end vertex
// sequence (lexicographically smaller of the two directions), or empty if not
// a path.
inline std::vector<Vertex> path_sequence(const Graph& g) {
    if (!is_tree(g)) return {};
    if (g.num_vertices() == 1) return {0};
    std::vector<Vertex> ends;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) > 2) return {};
        if (g.degree(v) == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return {};
    Vertex start = std::min(ends[0], ends[1]);
    std::vector<Vertex> seq{start};
    Vertex prev = -1, cur = start;
    while (static_cast<int>(seq.size()) < g.num_vertices()) {
        for (Vertex w : g.neighbors(cur)) {
            if (w != prev) {
                seq.push_back(w);
                prev = cur;
                cur = w;
                break;
            }
        }
    }
    return seq;
}

}  // namespace wcolib

#endif  // WCOLIB_GRAPH_HPP
