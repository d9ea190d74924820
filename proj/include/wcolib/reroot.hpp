#ifndef WCOLIB_REROOT_HPP
#define WCOLIB_REROOT_HPP

#include <vector>

#include "wcolib/families.hpp"
#include "wcolib/graph.hpp"
#include "wcolib/models.hpp"

namespace wcolib {

// Given a model of T'_{h,d}(X) in a connected host and a host vertex u,
// produce a model of T_{h,d}(X) whose root branch set contains u: pick a path
// P from u to the model with no internal vertex inside it, and fold the half
// of T' met by P (plus V(P)) into the root branch set. Every output branch set
// contains an input branch set; richness anchors survive.
inline RichModel reroot_tprime_model(const DoubleTower& dt, const Graph& host,
                                     const RichModel& input, Vertex u) {
    host.check_vertex(u);
    if (!is_connected(host)) throw NotConnected();
    const Graph& tprime = dt.graph;
    const Graph& tower = dt.tower_pattern.graph;
    if (!validate_model(tprime, host, input.model)) throw InvalidModel();

    VertexSet covered;
    for (const auto& b : input.model.branch)
        covered.insert(covered.end(), b.begin(), b.end());
    covered = sorted_unique(std::move(covered));

    auto path = geodesic(host, {u}, covered);
    if (path.empty()) throw NotConnected("no path from u to the model");
    Vertex hit = path.back();
    int x0 = -1;
    for (int x = 0; x < tprime.num_vertices(); ++x)
        if (set_contains(input.model.branch[static_cast<size_t>(x)], hit)) {
            x0 = x;
            break;
        }

    // side containing x0 gets folded; the other side survives as the tower
    std::vector<char> in_a(static_cast<size_t>(tprime.num_vertices()), 0);
    for (Vertex y = 0; y < tower.num_vertices(); ++y)
        in_a[static_cast<size_t>(dt.half_a[static_cast<size_t>(y)])] = 1;
    bool fold_a = in_a[static_cast<size_t>(x0)] != 0;  // the shared root folds into either; pick A
    const std::vector<Vertex>& fold_map = fold_a ? dt.half_a : dt.half_b;
    const std::vector<Vertex>& keep_map = fold_a ? dt.half_b : dt.half_a;

    RichModel out;
    out.model.pattern_n = tower.num_vertices();
    out.model.branch.assign(static_cast<size_t>(tower.num_vertices()), {});
    out.anchors.assign(static_cast<size_t>(tower.num_vertices()), -1);
    VertexSet root_branch(path.begin(), path.end());
    for (Vertex y = 0; y < tower.num_vertices(); ++y) {
        const auto& b = input.model.branch[static_cast<size_t>(fold_map[static_cast<size_t>(y)])];
        root_branch.insert(root_branch.end(), b.begin(), b.end());
    }
    Vertex root = dt.tower_pattern.root;
    out.model.branch[static_cast<size_t>(root)] = sorted_unique(std::move(root_branch));
    out.anchors[static_cast<size_t>(root)] = input.anchors.empty()
                                                 ? -1
                                                 : input.anchors[static_cast<size_t>(dt.root)];
    for (Vertex y = 0; y < tower.num_vertices(); ++y) {
        if (y == root) continue;
        Vertex src = keep_map[static_cast<size_t>(y)];
        out.model.branch[static_cast<size_t>(y)] = input.model.branch[static_cast<size_t>(src)];
        if (!input.anchors.empty())
            out.anchors[static_cast<size_t>(y)] = input.anchors[static_cast<size_t>(src)];
    }
    return out;
}

namespace detail {

// canonical embedding of F_{h,d} into F_{h,d+1} under BFS heap labels,
// skipping one child subtree of the root
inline void embed_fhd(int h, int d, Vertex pat_node, int pat_depth, Vertex big_node, int big_d,
                      Vertex skip_child, std::vector<Vertex>& image) {
    image[static_cast<size_t>(pat_node)] = big_node;
    if (pat_depth == h - 1) return;
    int taken = 0;
    for (int i = 1; i <= big_d && taken < d; ++i) {
        Vertex child = big_node * big_d + i;
        if (child == skip_child) continue;
        Vertex pat_child = pat_node * d + (taken + 1);
        ++taken;
        embed_fhd(h, d, pat_child, pat_depth + 1, child, big_d, -1, image);
    }
}

}  // namespace detail

// Given a model of F_{h,d+1} in a connected host and a host vertex u, produce
// a model of F_{h,d} with u in the root branch set: extend branch sets to
// cover the host, then merge the root with the child subtree containing u.
// Every input branch set lands inside some output branch set.
inline RichModel reroot_fhd_model(int h, int d, const Graph& host, const RichModel& input,
                                  Vertex u) {
    host.check_vertex(u);
    if (!is_connected(host)) throw NotConnected();
    RootedGraph big = dary_tree(h, d + 1);
    if (!validate_model(big.graph, host, input.model)) throw InvalidModel();

    // extend branch sets to cover V(host): absorb uncovered vertices into a
    // covered neighbor's branch set, smallest vertices first
    std::vector<int> owner(static_cast<size_t>(host.num_vertices()), -1);
    for (size_t x = 0; x < input.model.branch.size(); ++x)
        for (Vertex v : input.model.branch[x]) owner[static_cast<size_t>(v)] = static_cast<int>(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < host.num_vertices(); ++v) {
            if (owner[static_cast<size_t>(v)] != -1) continue;
            for (Vertex w : host.neighbors(v)) {
                if (owner[static_cast<size_t>(w)] != -1) {
                    owner[static_cast<size_t>(v)] = owner[static_cast<size_t>(w)];
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<VertexSet> extended(input.model.branch.size());
    for (Vertex v = 0; v < host.num_vertices(); ++v)
        if (owner[static_cast<size_t>(v)] != -1)
            extended[static_cast<size_t>(owner[static_cast<size_t>(v)])].push_back(v);
    for (auto& b : extended) b = sorted_unique(std::move(b));

    // child subtree of the root containing u's owner (any child if u sits in
    // the root branch itself)
    int x_u = owner[static_cast<size_t>(u)];
    Vertex skip_child = 1;  // first child by default
    if (x_u != 0) {
        Vertex cur = static_cast<Vertex>(x_u);
        while (cur > d + 1) cur = (cur - 1) / (d + 1);  // parent in the (d+1)-ary heap order
        skip_child = cur;
    }

    RootedGraph pat = dary_tree(h, d);
    std::vector<Vertex> image(static_cast<size_t>(pat.graph.num_vertices()), -1);
    detail::embed_fhd(h, d, 0, 0, 0, d + 1, skip_child, image);

    RichModel out;
    out.model.pattern_n = pat.graph.num_vertices();
    out.model.branch.assign(static_cast<size_t>(pat.graph.num_vertices()), {});
    out.anchors.assign(static_cast<size_t>(pat.graph.num_vertices()), -1);

    // root branch: extended root set plus the whole skipped subtree
    VertexSet root_branch = extended[0];
    std::vector<Vertex> stack{skip_child};
    while (!stack.empty()) {
        Vertex node = stack.back();
        stack.pop_back();
        if (node >= big.graph.num_vertices()) continue;
        const auto& b = extended[static_cast<size_t>(node)];
        root_branch.insert(root_branch.end(), b.begin(), b.end());
        for (int i = 1; i <= d + 1; ++i) {
            Vertex child = node * (d + 1) + i;
            if (child < big.graph.num_vertices()) stack.push_back(child);
        }
    }
    out.model.branch[0] = sorted_unique(std::move(root_branch));
    out.anchors[0] = input.anchors.empty() ? -1 : input.anchors[0];
    for (Vertex x = 1; x < pat.graph.num_vertices(); ++x) {
        Vertex src = image[static_cast<size_t>(x)];
        out.model.branch[static_cast<size_t>(x)] = extended[static_cast<size_t>(src)];
        if (!input.anchors.empty()) out.anchors[static_cast<size_t>(x)] = input.anchors[static_cast<size_t>(src)];
    }
    return out;
}

}  // namespace wcolib

#endif  // WCOLIB_REROOT_HPP
