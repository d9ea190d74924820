#ifndef WCOLIB_RNG_HPP
#define WCOLIB_RNG_HPP

#include <cstdint>
#include <vector>

#include "wcolib/graph.hpp"
#include "wcolib/structures.hpp"

namespace wcolib {

// splitmix64; platform-independent so seeded reports are byte-identical
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool chance(int num, int den) { return static_cast<int>(next() % static_cast<std::uint64_t>(den)) < num; }

private:
    std::uint64_t state_;
};

inline Graph random_graph(Rng& rng, int n, int percent) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(percent, 100)) g.add_edge(u, v);
    g.finalize();
    return g;
}

// uniform random attachment tree
inline Graph random_tree(Rng& rng, int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
    g.finalize();
    return g;
}

inline Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
    Graph g(n);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    for (int i = 0; i < extra_edges; ++i) {
        Vertex u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Graph(n, std::move(edges));
}

// Connected graph built along a sliding window of at most k+1 active vertices,
// together with the width-<=k path decomposition the construction yields.
struct PathwidthInstance {
    Graph graph;
    PathDecomposition pd;
};

inline PathwidthInstance random_pathwidth_instance(Rng& rng, int n, int k) {
    Graph g(n);
    PathDecomposition pd;
    VertexSet window{0};
    pd.bags.push_back(window);
    for (Vertex v = 1; v < n; ++v) {
        if (static_cast<int>(window.size()) == k + 1)
            window.erase(window.begin() + rng.below(static_cast<int>(window.size())));
        bool attached = false;
        for (Vertex w : window)
            if (rng.chance(1, 2)) {
                g.add_edge(w, v);
                attached = true;
            }
        if (!attached) g.add_edge(window[static_cast<size_t>(rng.below(static_cast<int>(window.size())))], v);
        window.push_back(v);
        window = sorted_unique(std::move(window));
        pd.bags.push_back(window);
    }
    g.finalize();
    return {std::move(g), std::move(pd)};
}

}  // namespace wcolib

#endif  // WCOLIB_RNG_HPP
