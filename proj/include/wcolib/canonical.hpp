#ifndef WCOLIB_CANONICAL_HPP
#define WCOLIB_CANONICAL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

namespace detail {

// Iterated color refinement: colors are recompressed ranks of
// (color, sorted neighbor colors) signatures. Equivariant under isomorphism.
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    int n = g.num_vertices();
    if (n == 0) return colors;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.push_back(colors[static_cast<size_t>(v)]);
            for (Vertex w : g.neighbors(v)) s.push_back(colors[static_cast<size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> idx(static_cast<size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)];
        });
        std::vector<int> next(static_cast<size_t>(n));
        int rank = 0;
        next[static_cast<size_t>(idx[0])] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[static_cast<size_t>(idx[static_cast<size_t>(i)])] !=
                sig[static_cast<size_t>(idx[static_cast<size_t>(i - 1)])])
                ++rank;
            next[static_cast<size_t>(idx[static_cast<size_t>(i)])] = rank;
        }
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

inline std::string adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.num_vertices();
    std::string bits(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2, '0');
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (g.adjacent(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
                bits[idx] = '1';
    return bits;
}

// Individualization-refinement; the canonical code is the minimum adjacency
// code over all refinement leaves. Branching covers every vertex of the first
// non-singleton color class, which keeps the result isomorphism-invariant.
struct CanonSearch {
    const Graph& g;
    std::string best;
    bool have_best = false;

    explicit CanonSearch(const Graph& g) : g(g) {}

    void descend(std::vector<int> colors) {
        colors = refine_colors(g, std::move(colors));
        int n = g.num_vertices();
        std::vector<int> count(static_cast<size_t>(n == 0 ? 1 : n), 0);
        for (int c : colors) ++count[static_cast<size_t>(c)];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[static_cast<size_t>(c)] > 1) {
                target = c;
                break;
            }
        if (target == -1) {
            std::vector<Vertex> order(static_cast<size_t>(n));
            for (Vertex v = 0; v < n; ++v)
                order[static_cast<size_t>(colors[static_cast<size_t>(v)])] = v;
            std::string code = adjacency_code(g, order);
            if (!have_best || code < best) {
                best = std::move(code);
                have_best = true;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (colors[static_cast<size_t>(v)] != target) continue;
            // split v out of its class, right before its former classmates
            std::vector<int> next = colors;
            for (Vertex u = 0; u < n; ++u)
                if (next[static_cast<size_t>(u)] >= target) ++next[static_cast<size_t>(u)];
            next[static_cast<size_t>(v)] = target;
            descend(std::move(next));
        }
    }
};

}  // namespace detail

// Canonical key: equal for isomorphic graphs, distinct otherwise. `cap` bounds
// the graph size (the branching degrades on large symmetric graphs).
inline std::string canonical_key(const Graph& g, int cap = 64) {
    if (g.num_vertices() > cap)
        throw SizeLimit("canonical labeling capped at " + std::to_string(cap) + " vertices");
    if (g.null()) return "0:";
    detail::CanonSearch s(g);
    s.descend(std::vector<int>(static_cast<size_t>(g.num_vertices()), 0));
    return std::to_string(g.num_vertices()) + ":" + s.best;
}

inline bool isomorphic(const Graph& a, const Graph& b, int cap = 64) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_key(a, cap) == canonical_key(b, cap);
}

}  // namespace wcolib

#endif  // WCOLIB_CANONICAL_HPP
