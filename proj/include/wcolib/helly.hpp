#ifndef WCOLIB_HELLY_HPP
#define WCOLIB_HELLY_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "wcolib/graph.hpp"
#include "wcolib/models.hpp"
#include "wcolib/structures.hpp"

namespace wcolib {

namespace detail {

inline std::vector<int> tree_depths(const Graph& tree, int root = 0) {
    auto dist = bfs_distances(tree, {root});
    return dist;
}

// Unique shallowest node of a connected set of tree nodes.
inline int top_node(const std::vector<int>& depth, const VertexSet& nodes) {
    int best = -1;
    for (Vertex x : nodes)
        if (best == -1 || depth[static_cast<size_t>(x)] < depth[static_cast<size_t>(best)])
            best = x;
    return best;
}

}  // namespace detail

// Outcome of the hit-or-pack dichotomy: either d pairwise disjoint family
// members, or a transversal that is the union of at most d-1 bags.
struct HitOrPack {
    bool packed = false;
    std::vector<int> pack_indices;    // member indices, pack arm
    std::vector<VertexSet> pack;      // the members themselves
    std::vector<int> hit_nodes;       // tree nodes whose bags form the hit
    VertexSet hit;                    // union of those bags
};

// Greedy deepest-top transversal over the members' touched subtrees. Subtrees
// of a tree satisfy min transversal = max disjoint packing, so exactly one arm
// always applies: d disjoint members, or <= d-1 bags meeting every member.
inline HitOrPack helly_hit_or_pack(const Graph& host, const TreeDecomposition& dec,
                                   const SubgraphFamily& family, int d) {
    if (d < 1) throw BadParams("d must be positive");
    if (!validate_tree_decomposition(host, dec).valid) throw InvalidDecomposition();
    if (!validate_family(host, family)) throw InvalidDecomposition("invalid family");

    auto depth = detail::tree_depths(dec.tree);
    std::vector<VertexSet> touched(family.members.size());
    for (size_t fi = 0; fi < family.members.size(); ++fi)
        for (int x = 0; x < dec.tree.num_vertices(); ++x)
            if (!sets_disjoint(dec.bags[static_cast<size_t>(x)], family.members[fi]))
                touched[fi].push_back(x);

    HitOrPack out;
    std::vector<char> alive(family.members.size(), 1);
    while (true) {
        int pick = -1;
        for (size_t fi = 0; fi < family.members.size(); ++fi) {
            if (!alive[fi]) continue;
            if (pick == -1 ||
                depth[static_cast<size_t>(detail::top_node(depth, touched[fi]))] >
                    depth[static_cast<size_t>(detail::top_node(depth, touched[static_cast<size_t>(pick)]))])
                pick = static_cast<int>(fi);
        }
        if (pick == -1) break;
        int x = detail::top_node(depth, touched[static_cast<size_t>(pick)]);
        out.pack_indices.push_back(pick);
        out.pack.push_back(family.members[static_cast<size_t>(pick)]);
        out.hit_nodes.push_back(x);
        for (size_t fi = 0; fi < family.members.size(); ++fi)
            if (alive[fi] && set_contains(touched[fi], x)) alive[fi] = 0;
        if (static_cast<int>(out.pack.size()) >= d) {
            out.packed = true;
            out.hit_nodes.clear();
            return out;
        }
    }
    out.packed = false;
    out.pack_indices.clear();
    out.pack.clear();
    for (int x : out.hit_nodes)
        out.hit = set_union(out.hit, dec.bags[static_cast<size_t>(x)]);
    return out;
}

// ---- interface shrinking -----------------------------------------------------

// Extend m bag nodes by the branch nodes of their Steiner tree; for every
// component C of host minus the enlarged bag union, N(V(C)) lies inside at
// most two bags.
inline std::vector<int> shrink_interfaces(const Graph& host, const TreeDecomposition& dec,
                                          const std::vector<int>& y_nodes) {
    if (y_nodes.empty()) throw BadParams("y_nodes nonempty");
    if (!validate_tree_decomposition(host, dec).valid) throw InvalidDecomposition();
    for (int y : y_nodes) dec.tree.check_vertex(y);

    // Steiner tree: peel unmarked leaves until only the spanning subtree remains
    int tn = dec.tree.num_vertices();
    std::vector<char> marked(static_cast<size_t>(tn), 0);
    for (int y : y_nodes) marked[static_cast<size_t>(y)] = 1;
    std::vector<char> in_steiner(static_cast<size_t>(tn), 1);
    std::vector<int> deg(static_cast<size_t>(tn), 0);
    for (int x = 0; x < tn; ++x) deg[static_cast<size_t>(x)] = dec.tree.degree(x);
    std::queue<int> leaves;
    for (int x = 0; x < tn; ++x)
        if (deg[static_cast<size_t>(x)] <= 1 && !marked[static_cast<size_t>(x)]) leaves.push(x);
    while (!leaves.empty()) {
        int x = leaves.front();
        leaves.pop();
        if (!in_steiner[static_cast<size_t>(x)]) continue;
        in_steiner[static_cast<size_t>(x)] = 0;
        for (Vertex w : dec.tree.neighbors(x)) {
            if (!in_steiner[static_cast<size_t>(w)]) continue;
            if (--deg[static_cast<size_t>(w)] <= 1 && !marked[static_cast<size_t>(w)])
                leaves.push(w);
        }
    }

    VertexSet x_nodes(y_nodes.begin(), y_nodes.end());
    for (int x = 0; x < tn; ++x) {
        if (!in_steiner[static_cast<size_t>(x)]) continue;
        int sdeg = 0;
        for (Vertex w : dec.tree.neighbors(x))
            if (in_steiner[static_cast<size_t>(w)]) ++sdeg;
        if (sdeg >= 3) x_nodes.push_back(x);
    }
    return sorted_unique(std::move(x_nodes));
}

// Exact check that `verts` fits inside the union of at most `limit` bags.
inline bool coverable_by_bags(const TreeDecomposition& dec, const VertexSet& verts, int limit) {
    if (verts.empty()) return true;
    auto rec = [&](auto&& self, VertexSet left, int remaining) -> bool {
        if (left.empty()) return true;
        if (remaining == 0) return false;
        Vertex v = left.front();
        for (size_t x = 0; x < dec.bags.size(); ++x) {
            if (!set_contains(dec.bags[x], v)) continue;
            if (self(self, set_difference(left, dec.bags[x]), remaining - 1)) return true;
        }
        return false;
    };
    return rec(rec, verts, limit);
}

// Postcondition verifier for shrink_interfaces.
inline bool verify_shrunk_interfaces(const Graph& host, const TreeDecomposition& dec,
                                     const std::vector<int>& x_nodes, bool dec_is_natural) {
    VertexSet big;
    for (int x : x_nodes) big = set_union(big, dec.bags[static_cast<size_t>(x)]);
    auto rest = remove_vertices(host, big);
    for (const auto& comp_local : components(rest.graph)) {
        VertexSet comp;
        for (Vertex v : comp_local) comp.push_back(rest.to_old[static_cast<size_t>(v)]);
        comp = sorted_unique(std::move(comp));
        VertexSet nbhd;
        for (Vertex v : comp)
            for (Vertex w : host.neighbors(v))
                if (!set_contains(comp, w)) nbhd.push_back(w);
        nbhd = sorted_unique(std::move(nbhd));
        if (!coverable_by_bags(dec, nbhd, 2)) return false;
        if (dec_is_natural) {
            auto minus_comp = remove_vertices(host, comp);
            auto comps2 = components(minus_comp.graph);
            int touched = 0;
            for (const auto& c2 : comps2) {
                VertexSet orig;
                for (Vertex v : c2) orig.push_back(minus_comp.to_old[static_cast<size_t>(v)]);
                if (!sets_disjoint(sorted_unique(std::move(orig)), nbhd)) ++touched;
            }
            if (touched > 2) return false;
        }
    }
    return true;
}

// ---- star-exclusion layering ---------------------------------------------------

// Result of the star layering: either an F-rich model of the star F_{2,d}
// (root branch set first), or a cover S with a layering of host[S] rooted at
// P_0 = {u}.
struct StarLayering {
    bool witness = false;
    RichModel model;                 // witness arm; pattern = star with d leaves, root 0
    VertexSet cover;                 // cover arm
    std::vector<VertexSet> layers;   // layering of host[cover], layers[0] = {u}
};

namespace detail {

struct StarCtx {
    const Graph& g;
    const TreeDecomposition& dec;
    const SubgraphFamily& fam;     // local-label members
    std::vector<int> fam_index;    // local member -> original family index
    int d;
    Vertex u;
    std::vector<int> node_depth;
    std::vector<int> score;        // per vertex: min depth of a bag containing it
};

// Components of (g-u)-removed that contain a whole family member and a
// neighbor of u characterize the unhit part of the implicit star family.
struct QualifyingComponent {
    VertexSet verts;
    std::vector<int> members;  // local family indices wholly inside
};

inline std::vector<QualifyingComponent> qualifying_components(const StarCtx& c,
                                                              const VertexSet& removed) {
    VertexSet drop = set_union(removed, {c.u});
    auto rest = remove_vertices(c.g, drop);
    std::vector<QualifyingComponent> out;
    for (const auto& comp_local : components(rest.graph)) {
        VertexSet comp;
        for (Vertex v : comp_local) comp.push_back(rest.to_old[static_cast<size_t>(v)]);
        comp = sorted_unique(std::move(comp));
        bool meets_u = false;
        for (Vertex w : c.g.neighbors(c.u))
            if (set_contains(comp, w)) meets_u = true;
        if (!meets_u) continue;
        QualifyingComponent q;
        q.verts = comp;
        for (size_t fi = 0; fi < c.fam.members.size(); ++fi)
            if (is_subset(c.fam.members[fi], comp)) q.members.push_back(static_cast<int>(fi));
        if (!q.members.empty()) out.push_back(std::move(q));
    }
    return out;
}

inline bool hits_star_family(const StarCtx& c, const VertexSet& removed) {
    return qualifying_components(c, removed).empty();
}

// Deepest-top member of the implicit family given already chosen bags: for
// each wholly contained member F, the best connected superset touching N(u)
// has top depth min(min score over F, widest-path bottleneck from F to N(u)).
struct GreedyPick {
    VertexSet member_set;  // the chosen implicit member A* = F u path
    int local_member = -1;
    int value = -1;
};

inline std::optional<GreedyPick> deepest_top_member(const StarCtx& c, const VertexSet& removed) {
    auto comps = qualifying_components(c, removed);
    std::optional<GreedyPick> best;
    for (const auto& q : comps) {
        // widest-path labels from each member within the component
        for (int fi : q.members) {
            const VertexSet& F = c.fam.members[static_cast<size_t>(fi)];
            int min_f = kInfDist;
            for (Vertex v : F) min_f = std::min(min_f, c.score[static_cast<size_t>(v)]);
            // maximize min score along a path from F to N(u) inside the component
            std::vector<int> label(static_cast<size_t>(c.g.num_vertices()), -1);
            std::vector<Vertex> parent(static_cast<size_t>(c.g.num_vertices()), -1);
            std::priority_queue<std::pair<int, Vertex>> pq;
            for (Vertex v : F) {
                label[static_cast<size_t>(v)] = kInfDist;
                pq.emplace(kInfDist, -v);  // max score, then smallest vertex
            }
            while (!pq.empty()) {
                auto [lab, negv] = pq.top();
                pq.pop();
                Vertex v = -negv;
                if (lab < label[static_cast<size_t>(v)]) continue;
                for (Vertex w : c.g.neighbors(v)) {
                    if (!set_contains(q.verts, w)) continue;
                    int cand = std::min(lab, c.score[static_cast<size_t>(w)]);
                    if (cand > label[static_cast<size_t>(w)]) {
                        label[static_cast<size_t>(w)] = cand;
                        parent[static_cast<size_t>(w)] = v;
                        pq.emplace(cand, -w);
                    }
                }
            }
            int bottleneck = -1;
            Vertex gate = -1;
            for (Vertex w : c.g.neighbors(c.u)) {
                if (!set_contains(q.verts, w)) continue;
                int lab = set_contains(F, w) ? kInfDist : label[static_cast<size_t>(w)];
                if (lab > bottleneck) {
                    bottleneck = lab;
                    gate = w;
                }
            }
            if (bottleneck < 0) continue;
            int value = std::min(min_f, bottleneck);
            if (!best || value > best->value) {
                GreedyPick pick;
                pick.local_member = fi;
                pick.value = value;
                VertexSet a = F;
                if (!set_contains(F, gate)) {
                    Vertex walk = gate;
                    while (walk != -1 && !set_contains(F, walk)) {
                        a.push_back(walk);
                        walk = parent[static_cast<size_t>(walk)];
                    }
                }
                pick.member_set = sorted_unique(std::move(a));
                best = pick;
            }
        }
    }
    return best;
}

inline int top_of_set(const StarCtx& c, const VertexSet& verts) {
    int best = -1;
    for (int x = 0; x < c.dec.tree.num_vertices(); ++x) {
        if (sets_disjoint(c.dec.bags[static_cast<size_t>(x)], verts)) continue;
        if (best == -1 ||
            c.node_depth[static_cast<size_t>(x)] < c.node_depth[static_cast<size_t>(best)])
            best = x;
    }
    return best;
}

inline StarLayering star_layering_rec(const Graph& g, const TreeDecomposition& dec,
                                      const SubgraphFamily& fam,
                                      const std::vector<int>& fam_index, int d, Vertex u);

}  // namespace detail

// star pattern for the witness arm: root 0, leaves 1..d
inline Graph star_pattern(int d) {
    Graph s(d + 1);
    for (int i = 1; i <= d; ++i) s.add_edge(0, i);
    s.finalize();
    return s;
}

namespace detail {

inline StarLayering star_layering_rec(const Graph& g, const TreeDecomposition& dec,
                                      const SubgraphFamily& fam,
                                      const std::vector<int>& fam_index, int d, Vertex u) {
    StarCtx c{g, dec, fam, fam_index, d, u, tree_depths(dec.tree), {}};
    c.score.assign(static_cast<size_t>(g.num_vertices()), kInfDist);
    for (int x = 0; x < dec.tree.num_vertices(); ++x)
        for (Vertex v : dec.bags[static_cast<size_t>(x)])
            if (v != u)
                c.score[static_cast<size_t>(v)] =
                    std::min(c.score[static_cast<size_t>(v)], c.node_depth[static_cast<size_t>(x)]);

    // members that survive in g - u
    bool any_member = false;
    for (const auto& m : fam.members)
        if (!set_contains(m, u)) any_member = true;
    if (!any_member) {
        StarLayering out;
        out.witness = false;
        out.cover = {u};
        out.layers = {{u}};
        return out;
    }

    // implicit hit-or-pack with parameter d+1
    VertexSet removed;
    std::vector<GreedyPick> picks;
    while (static_cast<int>(picks.size()) <= d) {
        auto pick = deepest_top_member(c, removed);
        if (!pick) break;
        picks.push_back(*pick);
        int x = top_of_set(c, pick->member_set);
        VertexSet bag = set_difference(c.dec.bags[static_cast<size_t>(x)], {u});
        removed = set_union(removed, bag);
    }
    if (static_cast<int>(picks.size()) == d + 1) {
        // assemble the F-rich star model: root = {u} + last pick, leaves = first d
        StarLayering out;
        out.witness = true;
        out.model.model.pattern_n = d + 1;
        out.model.anchors.assign(static_cast<size_t>(d + 1), -1);
        out.model.model.branch.assign(static_cast<size_t>(d + 1), {});
        out.model.model.branch[0] = sorted_unique(set_union(picks.back().member_set, {u}));
        out.model.anchors[0] = fam_index[static_cast<size_t>(picks.back().local_member)];
        for (int i = 0; i < d; ++i) {
            out.model.model.branch[static_cast<size_t>(i + 1)] =
                picks[static_cast<size_t>(i)].member_set;
            out.model.anchors[static_cast<size_t>(i + 1)] =
                fam_index[static_cast<size_t>(picks[static_cast<size_t>(i)].local_member)];
        }
        return out;
    }

    // hit arm: Z = chosen bags, shrunk to a vertex-inclusion-minimal hitting set
    VertexSet z = removed;
    for (Vertex zz : removed) {
        VertexSet without = set_difference(z, {zz});
        if (hits_star_family(c, without)) z = std::move(without);
    }
    if (z.empty()) throw Error("star layering: empty hitting set with members left");

    // components avoiding N(u) survive into the contracted graph
    VertexSet drop = set_union(z, {u});
    auto rest = remove_vertices(g, drop);
    VertexSet w_set;
    for (const auto& comp_local : components(rest.graph)) {
        VertexSet comp;
        for (Vertex v : comp_local) comp.push_back(rest.to_old[static_cast<size_t>(v)]);
        comp = sorted_unique(std::move(comp));
        bool meets_u = false;
        for (Vertex nb : g.neighbors(u))
            if (set_contains(comp, nb)) meets_u = true;
        if (!meets_u) w_set.insert(w_set.end(), comp.begin(), comp.end());
    }
    w_set = sorted_unique(std::move(w_set));

    // u-z connector paths; they avoid every surviving component
    VertexSet q_set{u};
    for (Vertex zz : z) {
        VertexSet others = set_difference(z, {zz});
        auto sub = remove_vertices(g, set_union(others, w_set));
        // path from u to zz avoiding other z's and the surviving components
        std::vector<Vertex> local_path =
            geodesic(sub.graph, {sub.to_new[static_cast<size_t>(u)]},
                     {sub.to_new[static_cast<size_t>(zz)]});
        if (local_path.empty()) throw Error("star layering: no connector path");
        for (Vertex lv : local_path) q_set.push_back(sub.to_old[static_cast<size_t>(lv)]);
    }
    q_set = sorted_unique(std::move(q_set));

    // contract q_set into u' = 0; w_set keeps labels 1..|W|
    int wn = static_cast<int>(w_set.size());
    Graph g2(wn + 1);
    std::vector<Vertex> w_to_new(static_cast<size_t>(g.num_vertices()), -1);
    for (int i = 0; i < wn; ++i) w_to_new[static_cast<size_t>(w_set[static_cast<size_t>(i)])] = i + 1;
    for (const auto& [a, b] : g.edges()) {
        bool aq = set_contains(q_set, a), bq = set_contains(q_set, b);
        bool aw = set_contains(w_set, a), bw = set_contains(w_set, b);
        if (aw && bw)
            g2.add_edge(w_to_new[static_cast<size_t>(a)], w_to_new[static_cast<size_t>(b)]);
        else if (aq && bw && !g2.adjacent(0, w_to_new[static_cast<size_t>(b)]))
            g2.add_edge(0, w_to_new[static_cast<size_t>(b)]);
        else if (bq && aw && !g2.adjacent(0, w_to_new[static_cast<size_t>(a)]))
            g2.add_edge(0, w_to_new[static_cast<size_t>(a)]);
    }
    g2.finalize();

    TreeDecomposition dec2;
    dec2.tree = dec.tree;
    dec2.bags.resize(dec.bags.size());
    for (size_t x = 0; x < dec.bags.size(); ++x) {
        VertexSet nb;
        bool outside = false;
        for (Vertex v : dec.bags[x]) {
            if (set_contains(w_set, v))
                nb.push_back(w_to_new[static_cast<size_t>(v)]);
            else
                outside = true;
        }
        if (outside) nb.push_back(0);
        dec2.bags[x] = sorted_unique(std::move(nb));
    }

    SubgraphFamily fam2;
    std::vector<int> fam2_index;
    for (size_t fi = 0; fi < fam.members.size(); ++fi) {
        if (!is_subset(fam.members[fi], w_set)) continue;
        VertexSet mapped;
        for (Vertex v : fam.members[fi]) mapped.push_back(w_to_new[static_cast<size_t>(v)]);
        fam2.members.push_back(sorted_unique(std::move(mapped)));
        fam2_index.push_back(fam_index[fi]);
    }

    StarLayering inner = star_layering_rec(g2, dec2, fam2, fam2_index, d, 0);

    if (inner.witness) {
        // lift the witness: expand u' to the contracted connector set
        StarLayering out;
        out.witness = true;
        out.model = inner.model;
        for (auto& branch : out.model.model.branch) {
            VertexSet lifted;
            for (Vertex v : branch) {
                if (v == 0) {
                    lifted.insert(lifted.end(), q_set.begin(), q_set.end());
                } else {
                    lifted.push_back(w_set[static_cast<size_t>(v - 1)]);
                }
            }
            branch = sorted_unique(std::move(lifted));
        }
        return out;
    }

    StarLayering out;
    out.witness = false;
    out.layers.push_back({u});
    out.layers.push_back(z);
    for (size_t i = 1; i < inner.layers.size(); ++i) {
        VertexSet lifted;
        for (Vertex v : inner.layers[i]) {
            if (v == 0) throw Error("star layering: u' outside layer 0");
            lifted.push_back(w_set[static_cast<size_t>(v - 1)]);
        }
        out.layers.push_back(sorted_unique(std::move(lifted)));
    }
    out.cover = {u};
    out.cover = set_union(out.cover, z);
    for (size_t i = 2; i < out.layers.size(); ++i) out.cover = set_union(out.cover, out.layers[i]);
    return out;
}

}  // namespace detail

// Star-exclusion layering: either an F-rich model of F_{2,d} in the host, or a
// cover S with a layering of host[S] rooted at u such that S hits every
// member, component neighborhoods sit in at most two consecutive layers, and
// every layer fits in at most d bags.
inline StarLayering star_layering(const Graph& host, const TreeDecomposition& dec,
                                  const SubgraphFamily& family, int d, Vertex u) {
    if (d < 1) throw BadParams("d must be positive");
    if (!is_connected(host)) throw NotConnected();
    host.check_vertex(u);
    if (!validate_tree_decomposition(host, dec).valid) throw InvalidDecomposition();
    if (!validate_family(host, family)) throw InvalidDecomposition("invalid family");
    std::vector<int> identity(family.members.size());
    for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    return detail::star_layering_rec(host, dec, family, identity, d, u);
}

// Per-clause validator for the cover arm.
struct StarCoverReport {
    bool hits_all = true;
    bool layering_ok = true;
    bool neighborhoods_ok = true;
    bool bags_ok = true;
    bool ok() const { return hits_all && layering_ok && neighborhoods_ok && bags_ok; }
};

inline StarCoverReport validate_star_cover(const Graph& host, const TreeDecomposition& dec,
                                           const SubgraphFamily& family, int d, Vertex u,
                                           const StarLayering& res) {
    StarCoverReport rep;
    const VertexSet& S = res.cover;
    for (const auto& m : family.members)
        if (sets_disjoint(m, S)) rep.hits_all = false;

    if (res.layers.empty() || res.layers[0] != VertexSet{u}) rep.layering_ok = false;
    VertexSet seen;
    for (const auto& p : res.layers) {
        if (p.empty()) rep.layering_ok = false;
        if (!sets_disjoint(seen, p)) rep.layering_ok = false;
        seen = set_union(seen, p);
    }
    if (seen != S) rep.layering_ok = false;
    auto level_of = [&](Vertex v) -> int {
        for (size_t i = 0; i < res.layers.size(); ++i)
            if (set_contains(res.layers[i], v)) return static_cast<int>(i);
        return -1;
    };
    auto sub = induced_subgraph(host, S);
    for (const auto& [a, b] : sub.graph.edges()) {
        int la = level_of(sub.to_old[static_cast<size_t>(a)]);
        int lb = level_of(sub.to_old[static_cast<size_t>(b)]);
        if (std::abs(la - lb) > 1) rep.layering_ok = false;
    }

    auto rest = remove_vertices(host, S);
    for (const auto& comp_local : components(rest.graph)) {
        VertexSet comp;
        for (Vertex v : comp_local) comp.push_back(rest.to_old[static_cast<size_t>(v)]);
        comp = sorted_unique(std::move(comp));
        int lo = kInfDist, hi = -1;
        for (Vertex v : comp)
            for (Vertex w : host.neighbors(v)) {
                if (set_contains(comp, w)) continue;
                int lw = level_of(w);
                if (lw < 0) {
                    rep.neighborhoods_ok = false;
                    continue;
                }
                lo = std::min(lo, lw);
                hi = std::max(hi, lw);
            }
        if (hi >= 0 && hi - lo > 1) rep.neighborhoods_ok = false;
    }

    for (size_t i = 1; i < res.layers.size(); ++i)
        if (!coverable_by_bags(dec, res.layers[i], d)) rep.bags_ok = false;
    return rep;
}

}  // namespace wcolib

#endif  // WCOLIB_HELLY_HPP
