#ifndef WCOLIB_ORDERING_HPP
#define WCOLIB_ORDERING_HPP

#include <algorithm>
#include <queue>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

// An ordering of a vertex scope S. `sequence` lists each scope vertex exactly
// once; position in the sequence is the <=_sigma order.
struct Ordering {
    VertexSet scope;               // sorted
    std::vector<Vertex> sequence;  // permutation of scope

    static Ordering of(std::vector<Vertex> seq) {
        Ordering o;
        o.sequence = std::move(seq);
        o.scope = sorted_unique(o.sequence);
        return o;
    }

    bool consistent() const {
        return sorted_unique(sequence).size() == sequence.size() &&
               sorted_unique(sequence) == scope;
    }

    // restriction sigma|_F, keeping relative order
    Ordering restrict(const VertexSet& keep) const {
        Ordering o;
        o.scope = set_intersection(scope, sorted_unique(keep));
        for (Vertex v : sequence)
            if (set_contains(o.scope, v)) o.sequence.push_back(v);
        return o;
    }
};

inline void check_scoped(const Graph& g, const VertexSet& scope, const Ordering& sigma) {
    for (Vertex v : scope) g.check_vertex(v);
    if (!sigma.consistent() || sigma.scope != scope)
        throw ScopeMismatch("ordering does not match scope");
}

// WReach_r[g,S,sigma,u] for every u: the v in S admitting a u-v path of length
// <= r whose S-vertices are all >=_sigma v. Computed per v by deleting the
// scope vertices before v and running a radius-r BFS from v.
inline std::vector<VertexSet> wreach_sets(const Graph& g, const VertexSet& scope,
                                          const Ordering& sigma, int r) {
    if (r < 0) throw BadParams("negative radius");
    check_scoped(g, scope, sigma);
    std::vector<VertexSet> reach(static_cast<size_t>(g.num_vertices()));
    std::vector<char> deleted(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<int> dist(static_cast<size_t>(g.num_vertices()));
    // walk sigma back to front so that `deleted` marks exactly {w in S : w <_sigma v}
    std::vector<Vertex> order = sigma.sequence;
    for (Vertex w : order) deleted[static_cast<size_t>(w)] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        deleted[static_cast<size_t>(v)] = 0;
        std::fill(dist.begin(), dist.end(), kInfDist);
        std::queue<Vertex> q;
        dist[static_cast<size_t>(v)] = 0;
        q.push(v);
        reach[static_cast<size_t>(v)].push_back(v);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            if (dist[static_cast<size_t>(u)] == r) continue;
            for (Vertex w : g.neighbors(u)) {
                if (deleted[static_cast<size_t>(w)]) continue;
                if (dist[static_cast<size_t>(w)] != kInfDist) continue;
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push(w);
                if (w != v) reach[static_cast<size_t>(w)].push_back(v);
            }
        }
    }
    for (auto& s : reach) std::sort(s.begin(), s.end());
    return reach;
}

struct WcolCertificate {
    int r = 0;
    int value = 0;
    Ordering ordering;
    Vertex witness_vertex = -1;
    VertexSet witness_set;
    bool exact = false;
};

// wcol_r(G,S,sigma) = max_u |WReach_r[G,S,sigma,u]| with an attaining witness
// (smallest such u).
inline WcolCertificate wcol_of_ordering(const Graph& g, const VertexSet& scope,
                                        const Ordering& sigma, int r) {
    auto reach = wreach_sets(g, scope, sigma, r);
    WcolCertificate cert;
    cert.r = r;
    cert.ordering = sigma;
    cert.exact = false;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        int sz = static_cast<int>(reach[static_cast<size_t>(u)].size());
        if (sz > cert.value) {
            cert.value = sz;
            cert.witness_vertex = u;
            cert.witness_set = reach[static_cast<size_t>(u)];
        }
    }
    return cert;
}

inline WcolCertificate wcol_of_ordering(const Graph& g, const Ordering& sigma, int r) {
    return wcol_of_ordering(g, all_vertices(g), sigma, r);
}

}  // namespace wcolib

#endif  // WCOLIB_ORDERING_HPP
