#ifndef WCOLIB_STRUCTURES_HPP
#define WCOLIB_STRUCTURES_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

// Ordered partition (P_0,...,P_l) of its scope; every scoped edge joins the
// same part or consecutive parts.
struct Layering {
    std::vector<VertexSet> parts;

    VertexSet scope() const {
        VertexSet s;
        for (const auto& p : parts) s.insert(s.end(), p.begin(), p.end());
        return sorted_unique(std::move(s));
    }
};

// Tree-indexed partition; scoped edges stay within a part or cross parts of
// tree-adjacent nodes.
struct TreePartition {
    Graph tree;
    std::vector<VertexSet> parts;  // one per tree node

    VertexSet scope() const {
        VertexSet s;
        for (const auto& p : parts) s.insert(s.end(), p.begin(), p.end());
        return sorted_unique(std::move(s));
    }
};

struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;  // one per tree node

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

// Path decomposition: bags along 0..l; the tree is the path 0-1-...-l.
struct PathDecomposition {
    std::vector<VertexSet> bags;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }

    TreeDecomposition as_tree() const {
        TreeDecomposition td;
        Graph t(static_cast<int>(bags.size()));
        for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) t.add_edge(i, i + 1);
        t.finalize();
        td.tree = std::move(t);
        td.bags = bags;
        return td;
    }
};

// ---- validation --------------------------------------------------------

struct Violation {
    std::string clause;
    std::string witness;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::optional<int> width;
    std::optional<bool> natural;

    void fail(const std::string& clause, const std::string& witness) {
        valid = false;
        violations.push_back({clause, witness});
    }

    std::string to_string() const {
        if (valid) return "valid";
        std::ostringstream os;
        for (const auto& v : violations) os << v.clause << " [" << v.witness << "]\n";
        return os.str();
    }
};

namespace detail {

inline std::string vertex_name(Vertex v) { return std::to_string(v); }
inline std::string edge_name(Vertex u, Vertex v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

inline bool parts_disjoint_nonempty(const std::vector<VertexSet>& parts, ValidationReport& rep,
                                    const Graph& g) {
    std::vector<int> owner(static_cast<size_t>(g.num_vertices()), -1);
    bool ok = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) {
            rep.fail("part nonempty", "part " + std::to_string(i));
            ok = false;
        }
        for (Vertex v : parts[i]) {
            if (v < 0 || v >= g.num_vertices()) {
                rep.fail("part vertex in range", vertex_name(v));
                ok = false;
                continue;
            }
            if (owner[static_cast<size_t>(v)] != -1) {
                rep.fail("parts disjoint", vertex_name(v));
                ok = false;
            }
            owner[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    return ok;
}

}  // namespace detail

inline ValidationReport validate_layering(const Graph& g, const Layering& lay) {
    ValidationReport rep;
    detail::parts_disjoint_nonempty(lay.parts, rep, g);
    std::vector<int> level(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < lay.parts.size(); ++i)
        for (Vertex v : lay.parts[i])
            if (v >= 0 && v < g.num_vertices()) level[static_cast<size_t>(v)] = static_cast<int>(i);
    for (const auto& [u, v] : g.edges()) {
        int lu = level[static_cast<size_t>(u)], lv = level[static_cast<size_t>(v)];
        if (lu == -1 || lv == -1) continue;  // edge leaves the scope
        if (std::abs(lu - lv) > 1)
            rep.fail("edge joins same or consecutive parts", detail::edge_name(u, v));
    }
    return rep;
}

inline ValidationReport validate_tree_partition(const Graph& g, const TreePartition& tp) {
    ValidationReport rep;
    if (!is_tree(tp.tree)) {
        rep.fail("index graph is a tree", "tree");
        return rep;
    }
    if (tp.parts.size() != static_cast<size_t>(tp.tree.num_vertices())) {
        rep.fail("one part per tree node", "parts size");
        return rep;
    }
    detail::parts_disjoint_nonempty(tp.parts, rep, g);
    std::vector<int> node(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < tp.parts.size(); ++i)
        for (Vertex v : tp.parts[i])
            if (v >= 0 && v < g.num_vertices()) node[static_cast<size_t>(v)] = static_cast<int>(i);
    for (const auto& [u, v] : g.edges()) {
        int xu = node[static_cast<size_t>(u)], xv = node[static_cast<size_t>(v)];
        if (xu == -1 || xv == -1) continue;
        if (xu != xv && !tp.tree.adjacent(xu, xv))
            rep.fail("edge within a part or across tree-adjacent parts", detail::edge_name(u, v));
    }
    return rep;
}

// check_natural additionally verifies that for every tree edge, each side's
// bag union induces a connected subgraph.
inline ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td,
                                                    bool check_natural = false) {
    ValidationReport rep;
    if (!is_tree(td.tree)) {
        rep.fail("index graph is a tree", "tree");
        return rep;
    }
    if (td.bags.size() != static_cast<size_t>(td.tree.num_vertices())) {
        rep.fail("one bag per tree node", "bags size");
        return rep;
    }
    for (size_t i = 0; i < td.bags.size(); ++i)
        for (Vertex v : td.bags[i])
            if (v < 0 || v >= g.num_vertices())
                rep.fail("bag vertex in range", detail::vertex_name(v));
    if (!rep.valid) return rep;

    // occurrence sets nonempty and connected in the tree
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        VertexSet occ;
        for (size_t i = 0; i < td.bags.size(); ++i)
            if (set_contains(td.bags[i], u)) occ.push_back(static_cast<Vertex>(i));
        if (occ.empty()) {
            rep.fail("every vertex occurs in a bag", detail::vertex_name(u));
            continue;
        }
        auto sub = induced_subgraph(td.tree, occ);
        if (!is_connected(sub.graph))
            rep.fail("occurrence set is a connected subtree", detail::vertex_name(u));
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (set_contains(bag, u) && set_contains(bag, v)) {
                covered = true;
                break;
            }
        if (!covered) rep.fail("every edge inside some bag", detail::edge_name(u, v));
    }
    if (rep.valid) rep.width = td.width();

    if (check_natural && rep.valid) {
        bool natural = true;
        for (const auto& [x, y] : td.tree.edges()) {
            Graph cut_tree = [&] {
                Graph t(td.tree.num_vertices());
                for (const auto& [a, b] : td.tree.edges())
                    if (!(a == x && b == y)) t.add_edge(a, b);
                t.finalize();
                return t;
            }();
            for (const auto& side : components(cut_tree)) {
                VertexSet un;
                for (Vertex node : side) {
                    const auto& bag = td.bags[static_cast<size_t>(node)];
                    un.insert(un.end(), bag.begin(), bag.end());
                }
                un = sorted_unique(std::move(un));
                if (un.empty()) continue;
                auto sub = induced_subgraph(g, un);
                if (!is_connected(sub.graph)) {
                    natural = false;
                    rep.fail("natural: side bag union connected",
                             "tree edge " + detail::edge_name(x, y));
                }
            }
        }
        rep.natural = natural;
    }
    return rep;
}

inline ValidationReport validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    if (pd.bags.empty()) {
        ValidationReport rep;
        rep.fail("path decomposition nonempty", "bags");
        return rep;
    }
    return validate_tree_decomposition(g, pd.as_tree());
}

enum class StructureKind { layering, tree_partition, tree_decomposition, path_decomposition };

}  // namespace wcolib

#endif  // WCOLIB_STRUCTURES_HPP
