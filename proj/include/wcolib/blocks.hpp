#ifndef WCOLIB_BLOCKS_HPP
#define WCOLIB_BLOCKS_HPP

#include <algorithm>
#include <stack>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

// Blocks of a graph: maximal connected subgraphs without a cut vertex. They
// come in three kinds: maximal 2-connected subgraphs, cut edges with their
// endpoints, and isolated vertices. Two blocks share at most one vertex, and
// such a vertex is a cut vertex.

struct BlockCutTree {
    std::vector<VertexSet> blocks;  // sorted sets, ordered by smallest vertex
    VertexSet cut_vertices;         // sorted
    // Incidence tree over blocks + cut vertices: node i < blocks.size() is
    // block i, node blocks.size() + j is cut_vertices[j].
    Graph incidence;

    int block_node(int block_index) const { return block_index; }
    int cut_node(int cut_index) const { return static_cast<int>(blocks.size()) + cut_index; }
};

namespace detail {

// Iterative Hopcroft-Tarjan. Emits blocks as edge sets via an edge stack;
// isolated vertices are emitted as singleton blocks.
struct BccState {
    const Graph& g;
    std::vector<int> disc, low, parent, child_count;
    std::vector<size_t> it;
    std::vector<Edge> estack;
    std::vector<VertexSet> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BccState(const Graph& g)
        : g(g),
          disc(static_cast<size_t>(g.num_vertices()), -1),
          low(static_cast<size_t>(g.num_vertices()), -1),
          parent(static_cast<size_t>(g.num_vertices()), -1),
          child_count(static_cast<size_t>(g.num_vertices()), 0),
          it(static_cast<size_t>(g.num_vertices()), 0),
          is_cut(static_cast<size_t>(g.num_vertices()), 0) {}

    void pop_block(const Edge& until) {
        VertexSet verts;
        while (true) {
            Edge e = estack.back();
            estack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        blocks.push_back(sorted_unique(std::move(verts)));
    }

    void run(Vertex root) {
        std::stack<Vertex> st;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        st.push(root);
        while (!st.empty()) {
            Vertex u = st.top();
            const auto& nb = g.neighbors(u);
            if (it[static_cast<size_t>(u)] < nb.size()) {
                Vertex w = nb[it[static_cast<size_t>(u)]++];
                if (disc[static_cast<size_t>(w)] == -1) {
                    parent[static_cast<size_t>(w)] = u;
                    ++child_count[static_cast<size_t>(u)];
                    estack.emplace_back(u, w);
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    st.push(w);
                } else if (w != parent[static_cast<size_t>(u)] &&
                           disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
                    estack.emplace_back(u, w);
                    low[static_cast<size_t>(u)] =
                        std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
                }
            } else {
                st.pop();
                Vertex p = parent[static_cast<size_t>(u)];
                if (p != -1) {
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)],
                                                           low[static_cast<size_t>(u)]);
                    if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)]) {
                        // p separates u's subtree: close a block.
                        if (parent[static_cast<size_t>(p)] != -1 ||
                            child_count[static_cast<size_t>(p)] > 1)
                            is_cut[static_cast<size_t>(p)] = 1;
                        pop_block(Edge(p, u));
                    }
                }
            }
        }
    }
};

}  // namespace detail

inline std::vector<VertexSet> biconnected_blocks(const Graph& g, VertexSet* cuts_out = nullptr) {
    detail::BccState s(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (s.disc[static_cast<size_t>(v)] == -1) {
            if (g.degree(v) == 0) {
                s.blocks.push_back({v});
            } else {
                s.run(v);
            }
        }
    }
    std::sort(s.blocks.begin(), s.blocks.end());
    if (cuts_out) {
        cuts_out->clear();
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (s.is_cut[static_cast<size_t>(v)]) cuts_out->push_back(v);
    }
    return s.blocks;
}

inline BlockCutTree block_cut_tree(const Graph& g) {
    if (!is_connected(g)) throw NotConnected();
    BlockCutTree t;
    t.blocks = biconnected_blocks(g, &t.cut_vertices);
    int b = static_cast<int>(t.blocks.size());
    int c = static_cast<int>(t.cut_vertices.size());
    Graph inc(b + c);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < c; ++j)
            if (set_contains(t.blocks[static_cast<size_t>(i)],
                             t.cut_vertices[static_cast<size_t>(j)]))
                inc.add_edge(t.block_node(i), t.cut_node(j));
    inc.finalize();
    t.incidence = std::move(inc);
    return t;
}

// ---- separations of order <= 1 -------------------------------------------

// A separation is stored as vertex data; with order <= 1 the side subgraphs
// are the induced ones and no edge assignment is needed.
struct Separation {
    VertexSet side_a;
    VertexSet side_b;
    VertexSet cut;  // side_a n side_b, 0 or 1 vertex

    int order() const { return static_cast<int>(cut.size()); }

    bool operator==(const Separation& o) const {
        return side_a == o.side_a && side_b == o.side_b;
    }
    bool operator<(const Separation& o) const {
        return std::tie(side_b, side_a) < std::tie(o.side_b, o.side_a);
    }
};

inline bool valid_separation(const Graph& g, const Separation& s) {
    if (set_union(s.side_a, s.side_b) != all_vertices(g)) return false;
    if (set_intersection(s.side_a, s.side_b) != s.cut) return false;
    if (s.cut.size() > 1) return false;
    VertexSet a_only = set_difference(s.side_a, s.cut);
    VertexSet b_only = set_difference(s.side_b, s.cut);
    for (const auto& [u, v] : g.edges()) {
        bool ua = set_contains(a_only, u), ub = set_contains(b_only, u);
        bool va = set_contains(a_only, v), vb = set_contains(b_only, v);
        if ((ua && vb) || (ub && va)) return false;
    }
    return true;
}

// All separations (A,B) of g of order <= 1 with V(A) != 0, V(B)\V(A) != 0 and
// B a block of g. Order-0 ones split off single-block components; order-1 ones
// detach leaf blocks at their cut vertex, plus the trivial ({v},B) splits when
// a component is a single block.
inline std::vector<Separation> order_one_separations(const Graph& g) {
    if (g.null()) throw NullGraph();
    VertexSet cuts;
    auto blocks = biconnected_blocks(g, &cuts);
    VertexSet all = all_vertices(g);
    std::vector<Separation> out;
    for (const auto& vb : blocks) {
        VertexSet block_cuts = set_intersection(vb, cuts);
        VertexSet rest = set_difference(all, vb);
        bool whole_component = true;
        for (Vertex v : vb)
            for (Vertex w : g.neighbors(v))
                if (!set_contains(vb, w)) whole_component = false;
        if (whole_component) {
            if (!rest.empty()) out.push_back({rest, vb, {}});
            if (vb.size() >= 2)
                for (Vertex v : vb)
                    out.push_back({set_union(rest, {v}), vb, {v}});
        } else if (block_cuts.size() == 1) {
            // leaf block of a multiblock component
            Vertex v = block_cuts.front();
            out.push_back({set_union(rest, {v}), vb, {v}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wcolib

#endif  // WCOLIB_BLOCKS_HPP
