#ifndef WCOLIB_MODELS_HPP
#define WCOLIB_MODELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wcolib/graph.hpp"

namespace wcolib {

// Branch-set map witnessing minor containment: disjoint connected branch sets,
// one per pattern vertex, with a host edge for every pattern edge.
struct Model {
    int pattern_n = 0;
    std::vector<VertexSet> branch;
};

// Family of connected host subgraphs, given by their vertex sets.
struct SubgraphFamily {
    std::vector<VertexSet> members;
};

// Model whose every branch set fully contains some family member.
struct RichModel {
    Model model;
    std::vector<int> anchors;  // pattern vertex -> member index
};

enum class SearchStatus { found, absent, budget_exhausted };

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<T> value;
    std::int64_t nodes = 0;
};

// ---- validators (independent of the searches) ------------------------------

inline bool connected_in(const Graph& host, const VertexSet& verts) {
    if (verts.empty()) return false;
    VertexSet seen{verts.front()};
    std::vector<Vertex> stack{verts.front()};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : host.neighbors(u)) {
            if (set_contains(verts, w) && !set_contains(seen, w)) {
                seen.push_back(w);
                std::sort(seen.begin(), seen.end());
                stack.push_back(w);
            }
        }
    }
    return seen.size() == verts.size();
}

inline bool edge_between(const Graph& host, const VertexSet& a, const VertexSet& b) {
    for (Vertex u : a)
        for (Vertex w : host.neighbors(u))
            if (set_contains(b, w)) return true;
    return false;
}

inline bool validate_model(const Graph& pattern, const Graph& host, const Model& m) {
    if (m.pattern_n != pattern.num_vertices()) return false;
    if (m.branch.size() != static_cast<size_t>(pattern.num_vertices())) return false;
    for (const auto& b : m.branch) {
        for (Vertex v : b)
            if (v < 0 || v >= host.num_vertices()) return false;
        if (!connected_in(host, b)) return false;
    }
    for (size_t i = 0; i < m.branch.size(); ++i)
        for (size_t j = i + 1; j < m.branch.size(); ++j)
            if (!sets_disjoint(m.branch[i], m.branch[j])) return false;
    for (const auto& [x, y] : pattern.edges())
        if (!edge_between(host, m.branch[static_cast<size_t>(x)],
                          m.branch[static_cast<size_t>(y)]))
            return false;
    return true;
}

inline bool validate_family(const Graph& host, const SubgraphFamily& fam) {
    for (const auto& member : fam.members) {
        if (member.empty()) return false;
        for (Vertex v : member)
            if (v < 0 || v >= host.num_vertices()) return false;
        if (!connected_in(host, member)) return false;
    }
    return true;
}

inline bool validate_rich_model(const Graph& pattern, const Graph& host,
                                const SubgraphFamily& fam, const RichModel& rm) {
    if (!validate_model(pattern, host, rm.model)) return false;
    if (rm.anchors.size() != rm.model.branch.size()) return false;
    for (size_t x = 0; x < rm.anchors.size(); ++x) {
        int idx = rm.anchors[x];
        if (idx < 0 || idx >= static_cast<int>(fam.members.size())) return false;
        if (!is_subset(fam.members[static_cast<size_t>(idx)], rm.model.branch[x])) return false;
    }
    return true;
}

// ---- subgraph embedding -----------------------------------------------------

namespace detail {

// Pattern vertex order for backtracking: highest degree first, then always a
// vertex with the most already placed neighbors.
inline std::vector<Vertex> embedding_order(const Graph& pattern) {
    int k = pattern.num_vertices();
    std::vector<char> placed(static_cast<size_t>(k), 0);
    std::vector<Vertex> order;
    for (int step = 0; step < k; ++step) {
        Vertex pick = -1;
        int pick_placed = -1, pick_deg = -1;
        for (Vertex x = 0; x < k; ++x) {
            if (placed[static_cast<size_t>(x)]) continue;
            int np = 0;
            for (Vertex y : pattern.neighbors(x))
                if (placed[static_cast<size_t>(y)]) ++np;
            if (np > pick_placed || (np == pick_placed && pattern.degree(x) > pick_deg)) {
                pick = x;
                pick_placed = np;
                pick_deg = pattern.degree(x);
            }
        }
        order.push_back(pick);
        placed[static_cast<size_t>(pick)] = 1;
    }
    return order;
}

}  // namespace detail

// Injective adjacency-preserving map of the pattern into the host (ordinary
// subgraph, not induced). Complete search within the node budget.
inline SearchResult<std::vector<Vertex>> is_subgraph(const Graph& pattern, const Graph& host,
                                                     std::int64_t budget = 20'000'000) {
    SearchResult<std::vector<Vertex>> res;
    int k = pattern.num_vertices();
    if (k == 0) {
        res.status = SearchStatus::found;
        res.value = std::vector<Vertex>{};
        return res;
    }
    if (k > host.num_vertices()) {
        res.status = SearchStatus::absent;
        return res;
    }
    std::vector<Vertex> order = detail::embedding_order(pattern);
    std::vector<Vertex> image(static_cast<size_t>(k), -1);
    std::vector<char> used(static_cast<size_t>(host.num_vertices()), 0);

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        Vertex x = order[static_cast<size_t>(depth)];
        // candidates: neighbors of an already placed pattern neighbor if one
        // exists, otherwise every unused host vertex
        Vertex anchor = -1;
        for (Vertex y : pattern.neighbors(x))
            if (image[static_cast<size_t>(y)] != -1) {
                anchor = y;
                break;
            }
        auto try_vertex = [&](Vertex v) -> int {
            if (++res.nodes > budget) return -1;
            if (used[static_cast<size_t>(v)]) return 0;
            if (host.degree(v) < pattern.degree(x)) return 0;
            for (Vertex y : pattern.neighbors(x)) {
                Vertex img = image[static_cast<size_t>(y)];
                if (img != -1 && !host.adjacent(v, img)) return 0;
            }
            image[static_cast<size_t>(x)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (self(self, depth + 1)) return 1;
            image[static_cast<size_t>(x)] = -1;
            used[static_cast<size_t>(v)] = 0;
            return 0;
        };
        if (anchor != -1) {
            for (Vertex v : host.neighbors(image[static_cast<size_t>(anchor)])) {
                int r = try_vertex(v);
                if (r != 0) return r > 0;
                if (res.nodes > budget) return false;
            }
        } else {
            for (Vertex v = 0; v < host.num_vertices(); ++v) {
                int r = try_vertex(v);
                if (r != 0) return r > 0;
                if (res.nodes > budget) return false;
            }
        }
        return false;
    };

    bool found = dfs(dfs, 0);
    if (found) {
        res.status = SearchStatus::found;
        res.value = image;
    } else {
        res.status = res.nodes > budget ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
    return res;
}

// ---- minor model search -------------------------------------------------------

namespace detail {

using Mask = std::uint32_t;

struct MaskContext {
    int n = 0;
    std::vector<Mask> nbr;  // neighborhood mask per vertex

    explicit MaskContext(const Graph& host) : n(host.num_vertices()) {
        nbr.assign(static_cast<size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : host.neighbors(v)) nbr[static_cast<size_t>(v)] |= Mask{1} << w;
    }

    bool connected(Mask m) const {
        if (m == 0) return false;
        Mask reach = m & (~m + 1);  // lowest set bit
        while (true) {
            Mask grow = reach;
            Mask rest = reach;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                grow |= nbr[static_cast<size_t>(v)] & m;
            }
            if (grow == reach) break;
            reach = grow;
        }
        return reach == m;
    }

    Mask neighborhood(Mask m) const {
        Mask out = 0;
        Mask rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out |= nbr[static_cast<size_t>(v)];
        }
        return out & ~m;
    }

    VertexSet to_set(Mask m) const {
        VertexSet out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }
};

struct ModelSearch {
    const Graph& pattern;
    const MaskContext& ctx;
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool exhausted = false;
    std::vector<Mask> candidates;         // connected subsets, ordered small first
    std::vector<int> anchor_of;           // per candidate: member index or -1
    std::vector<Vertex> order;
    std::vector<Mask> chosen;             // per pattern vertex (order-indexed slots)
    std::vector<int> chosen_anchor;

    bool dfs(int depth, Mask used) {
        if (depth == pattern.num_vertices()) return true;
        Vertex x = order[static_cast<size_t>(depth)];
        for (size_t ci = 0; ci < candidates.size(); ++ci) {
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            Mask m = candidates[ci];
            if (m & used) continue;
            if (!anchor_of.empty() && anchor_of[ci] < 0) continue;
            bool ok = true;
            for (Vertex y : pattern.neighbors(x)) {
                Mask my = chosen[static_cast<size_t>(y)];
                if (my == 0) continue;  // y not placed yet
                if (!(ctx.neighborhood(my) & m)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(x)] = m;
            if (!anchor_of.empty()) chosen_anchor[static_cast<size_t>(x)] = anchor_of[ci];
            if (dfs(depth + 1, used | m)) return true;
            chosen[static_cast<size_t>(x)] = 0;
            if (exhausted) return false;
        }
        return false;
    }
};

inline std::vector<Mask> connected_subsets(const MaskContext& ctx) {
    std::vector<Mask> out;
    Mask full = ctx.n >= 32 ? ~Mask{0} : (Mask{1} << ctx.n) - 1;
    for (Mask m = 1; m <= full; ++m)
        if (ctx.connected(m)) out.push_back(m);
    std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

inline SearchResult<RichModel> model_search(const Graph& pattern, const Graph& host,
                                            const SubgraphFamily* family, std::int64_t budget,
                                            int host_cap) {
    if (host.num_vertices() > host_cap)
        throw SizeLimit("model search capped at " + std::to_string(host_cap) + " host vertices");
    SearchResult<RichModel> res;
    MaskContext ctx(host);
    ModelSearch s{pattern, ctx, budget, 0, false, {}, {}, {}, {}, {}};
    s.candidates = connected_subsets(ctx);
    if (family) {
        std::vector<Mask> member_masks;
        for (const auto& mem : family->members) {
            Mask m = 0;
            for (Vertex v : mem) m |= Mask{1} << v;
            member_masks.push_back(m);
        }
        s.anchor_of.assign(s.candidates.size(), -1);
        for (size_t ci = 0; ci < s.candidates.size(); ++ci)
            for (size_t fi = 0; fi < member_masks.size(); ++fi)
                if ((member_masks[fi] & ~s.candidates[ci]) == 0) {
                    s.anchor_of[ci] = static_cast<int>(fi);
                    break;
                }
    }
    s.order = pattern.num_vertices() ? embedding_order(pattern) : std::vector<Vertex>{};
    s.chosen.assign(static_cast<size_t>(pattern.num_vertices()), 0);
    s.chosen_anchor.assign(static_cast<size_t>(pattern.num_vertices()), -1);

    bool found = s.dfs(0, 0);
    res.nodes = s.nodes;
    if (found) {
        RichModel rm;
        rm.model.pattern_n = pattern.num_vertices();
        for (Vertex x = 0; x < pattern.num_vertices(); ++x)
            rm.model.branch.push_back(ctx.to_set(s.chosen[static_cast<size_t>(x)]));
        rm.anchors = s.chosen_anchor;
        res.status = SearchStatus::found;
        res.value = std::move(rm);
    } else {
        res.status = s.exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
    return res;
}

}  // namespace detail

// Minor containment: branch over candidate branch sets (connected host
// subsets, small first) with disjointness and realized-edge pruning. Complete
// within the budget.
inline SearchResult<Model> find_model(const Graph& pattern, const Graph& host,
                                      std::int64_t budget = 20'000'000, int host_cap = 22) {
    auto rich = detail::model_search(pattern, host, nullptr, budget, host_cap);
    SearchResult<Model> res;
    res.status = rich.status;
    res.nodes = rich.nodes;
    if (rich.value) res.value = std::move(rich.value->model);
    return res;
}

// F-rich minor containment: every branch set must fully contain a family
// member; the anchor indices are reported.
inline SearchResult<RichModel> find_rich_model(const Graph& pattern, const Graph& host,
                                               const SubgraphFamily& family,
                                               std::int64_t budget = 20'000'000,
                                               int host_cap = 22) {
    return detail::model_search(pattern, host, &family, budget, host_cap);
}

}  // namespace wcolib

#endif  // WCOLIB_MODELS_HPP
