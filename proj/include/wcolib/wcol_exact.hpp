#ifndef WCOLIB_WCOL_EXACT_HPP
#define WCOLIB_WCOL_EXACT_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "wcolib/graph.hpp"
#include "wcolib/ordering.hpp"
#include "wcolib/schemes.hpp"

namespace wcolib {

struct SearchStats {
    std::int64_t nodes = 0;
    bool budget_exhausted = false;
};

namespace detail {

// Vertices weakly reaching v once v is appended to the prefix: exactly the
// vertices within distance r of v in g minus the earlier prefix. Whether v is
// weakly reachable from u depends only on the prefix up to v, so the partial
// maximum is monotone under prefix extension and prunes admissibly.
inline std::vector<Vertex> reachers_of(const Graph& g, const std::vector<char>& placed, Vertex v,
                                       int r) {
    std::vector<int> dist(static_cast<size_t>(g.num_vertices()), kInfDist);
    std::vector<Vertex> out;
    std::queue<Vertex> q;
    dist[static_cast<size_t>(v)] = 0;
    q.push(v);
    out.push_back(v);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[static_cast<size_t>(u)] == r) continue;
        for (Vertex w : g.neighbors(u)) {
            if (placed[static_cast<size_t>(w)] || dist[static_cast<size_t>(w)] != kInfDist)
                continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            q.push(w);
            out.push_back(w);
        }
    }
    return out;
}

// u and v interchangeable by a transposition automorphism: equal open or
// closed neighborhoods.
inline bool twins(const Graph& g, Vertex u, Vertex v) {
    VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
    nu.erase(std::remove(nu.begin(), nu.end(), v), nu.end());
    nv.erase(std::remove(nv.begin(), nv.end(), u), nv.end());
    return nu == nv;
}

struct ExactSearch {
    const Graph& g;
    VertexSet scope;
    int r;
    std::int64_t budget;
    SearchStats stats;
    std::vector<char> placed;
    std::vector<int> cnt;
    std::vector<Vertex> prefix;
    int best_value;
    std::vector<Vertex> best_sequence;

    ExactSearch(const Graph& g, VertexSet scope, int r, std::int64_t budget)
        : g(g),
          scope(std::move(scope)),
          r(r),
          budget(budget),
          placed(static_cast<size_t>(g.num_vertices()), 0),
          cnt(static_cast<size_t>(g.num_vertices()), 0),
          best_value(kInfDist) {}

    void dfs(int partial_max) {
        if (prefix.size() == scope.size()) {
            if (partial_max < best_value) {
                best_value = partial_max;
                best_sequence = prefix;
            }
            return;
        }
        struct Cand {
            Vertex v;
            int value;
            std::vector<Vertex> reachers;
        };
        std::vector<Cand> cands;
        std::vector<Vertex> reps;
        for (Vertex v : scope) {
            if (placed[static_cast<size_t>(v)]) continue;
            bool dup = false;
            for (Vertex u : reps)
                if (twins(g, u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            reps.push_back(v);
            if (++stats.nodes > budget) {
                stats.budget_exhausted = true;
                return;
            }
            auto reach = reachers_of(g, placed, v, r);
            int val = partial_max;
            for (Vertex u : reach) val = std::max(val, cnt[static_cast<size_t>(u)] + 1);
            if (val < best_value) cands.push_back({v, val, std::move(reach)});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.value < b.value; });
        for (auto& c : cands) {
            if (c.value >= best_value) continue;  // incumbent may have improved
            placed[static_cast<size_t>(c.v)] = 1;
            for (Vertex u : c.reachers) ++cnt[static_cast<size_t>(u)];
            prefix.push_back(c.v);
            dfs(c.value);
            prefix.pop_back();
            for (Vertex u : c.reachers) --cnt[static_cast<size_t>(u)];
            placed[static_cast<size_t>(c.v)] = 0;
            if (stats.budget_exhausted) return;
        }
    }
};

}  // namespace detail

// Exact wcol_r(G,S) by branch and bound over ordering prefixes. On completed
// search the certificate carries the true minimum and exact=true; if the node
// budget runs out the best incumbent is returned with exact=false.
inline WcolCertificate wcol_exact(const Graph& g, const VertexSet& scope_in, int r,
                                  std::int64_t budget = 50'000'000,
                                  SearchStats* stats_out = nullptr) {
    VertexSet scope = sorted_unique(scope_in);
    for (Vertex v : scope) g.check_vertex(v);
    if (r < 0) throw BadParams("negative radius");

    if (scope.empty()) {
        WcolCertificate cert;
        cert.r = r;
        cert.value = 0;
        cert.exact = true;
        return cert;
    }

    // Constructive incumbents before the search.
    WcolCertificate best;
    auto consider = [&](const Ordering& sigma) {
        auto c = wcol_of_ordering(g, scope, sigma, r);
        if (best.ordering.sequence.empty() || c.value < best.value) best = c;
    };
    consider(Ordering::of(scope));
    if (is_tree(g) && scope == all_vertices(g)) consider(elimination_ordering(g, 0));
    {
        // reverse degeneracy-style ordering restricted to the scope
        Graph h = g;
        std::vector<char> gone(static_cast<size_t>(g.num_vertices()), 0);
        std::vector<Vertex> peel;
        std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
        for (Vertex v = 0; v < g.num_vertices(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
        for (int step = 0; step < g.num_vertices(); ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (!gone[static_cast<size_t>(v)] &&
                    (pick == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]))
                    pick = v;
            gone[static_cast<size_t>(pick)] = 1;
            peel.push_back(pick);
            for (Vertex w : g.neighbors(pick))
                if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
        }
        std::reverse(peel.begin(), peel.end());
        Ordering deg_order = Ordering::of(peel).restrict(scope);
        consider(deg_order);
    }

    detail::ExactSearch search(g, scope, r, budget);
    search.best_value = best.value;
    search.best_sequence = best.ordering.sequence;
    search.dfs(0);

    WcolCertificate cert;
    cert.r = r;
    Ordering sigma;
    sigma.scope = scope;
    sigma.sequence = search.best_sequence;
    cert = wcol_of_ordering(g, scope, sigma, r);
    cert.exact = !search.stats.budget_exhausted;
    if (stats_out) *stats_out = search.stats;
    return cert;
}

inline WcolCertificate wcol_exact(const Graph& g, int r, std::int64_t budget = 50'000'000,
                                  SearchStats* stats_out = nullptr) {
    return wcol_exact(g, all_vertices(g), r, budget, stats_out);
}

}  // namespace wcolib

#endif  // WCOLIB_WCOL_EXACT_HPP
