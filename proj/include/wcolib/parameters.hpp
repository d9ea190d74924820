#ifndef WCOLIB_PARAMETERS_HPP
#define WCOLIB_PARAMETERS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wcolib/blocks.hpp"
#include "wcolib/canonical.hpp"
#include "wcolib/graph.hpp"
#include "wcolib/structures.hpp"

namespace wcolib {

// Recursion trace for td / td2 / rtd2, in original vertex labels. Replaying it
// against the recursive definition reproduces the certified value.
struct ParamWitness {
    std::string kind;  // null | single | delete | components | blocks | leaf-block
    Vertex vertex = -1;            // deleted vertex or separation cut vertex
    std::vector<VertexSet> parts;  // component / block vertex sets
    std::vector<ParamWitness> children;
};

struct ParamCertificate {
    std::string parameter;  // td | td2 | rtd2 | vc | tw | pw
    int value = 0;
    std::variant<std::monostate, ParamWitness, VertexSet, TreeDecomposition, PathDecomposition>
        witness;
};

struct ParamOptions {
    int canon_cap = 26;           // graphs above this size are not memoized
    std::size_t memo_cap = std::size_t{1} << 22;
    bool use_td2_lower_bound = false;  // prune rtd2 with td2(G) <= rtd2(G)
};

class ParamMemo {
public:
    explicit ParamMemo(ParamOptions opts = {}) : opts(opts) {}

    ParamOptions opts;

    std::optional<int> lookup(int which, const Graph& g) {
        if (g.num_vertices() > opts.canon_cap) return std::nullopt;
        auto& table = tables_[static_cast<size_t>(which)];
        auto it = table.find(canonical_key(g));
        if (it == table.end()) return std::nullopt;
        return it->second;
    }

    void store(int which, const Graph& g, int value) {
        if (g.num_vertices() > opts.canon_cap) return;
        auto& table = tables_[static_cast<size_t>(which)];
        if (table.size() >= opts.memo_cap) throw SizeLimit("memo table cap exceeded");
        table.emplace(canonical_key(g), value);
    }

    enum { kTd = 0, kTd2 = 1, kRtd2 = 2 };

private:
    std::unordered_map<std::string, int> tables_[3];
};

namespace detail {

inline int td_value(const Graph& g, ParamMemo& memo);
inline int td2_value(const Graph& g, ParamMemo& memo);
inline int rtd2_value(const Graph& g, ParamMemo& memo);

inline int td_value(const Graph& g, ParamMemo& memo) {
    if (g.null()) return 0;
    auto comps = components(g);
    if (comps.size() > 1) {
        int best = 0;
        for (const auto& c : comps)
            best = std::max(best, td_value(induced_subgraph(g, c).graph, memo));
        return best;
    }
    if (auto hit = memo.lookup(ParamMemo::kTd, g)) return *hit;
    int best = kInfDist;
    for (Vertex v = 0; v < g.num_vertices() && best > 1; ++v)
        best = std::min(best, td_value(remove_vertices(g, {v}).graph, memo) + 1);
    memo.store(ParamMemo::kTd, g, best);
    return best;
}

inline int td2_value(const Graph& g, ParamMemo& memo) {
    if (g.null()) return 0;
    auto blocks = biconnected_blocks(g);
    if (blocks.size() > 1) {
        int best = 0;
        for (const auto& b : blocks)
            best = std::max(best, td2_value(induced_subgraph(g, b).graph, memo));
        return best;
    }
    if (auto hit = memo.lookup(ParamMemo::kTd2, g)) return *hit;
    int best = kInfDist;
    for (Vertex v = 0; v < g.num_vertices() && best > 1; ++v)
        best = std::min(best, td2_value(remove_vertices(g, {v}).graph, memo) + 1);
    memo.store(ParamMemo::kTd2, g, best);
    return best;
}

// Leaf blocks of a connected multiblock graph: blocks containing exactly one
// cut vertex, paired with that cut vertex.
inline std::vector<std::pair<VertexSet, Vertex>> leaf_blocks(const Graph& g) {
    VertexSet cuts;
    auto blocks = biconnected_blocks(g, &cuts);
    std::vector<std::pair<VertexSet, Vertex>> out;
    for (const auto& b : blocks) {
        VertexSet bc = set_intersection(b, cuts);
        if (bc.size() == 1) out.emplace_back(b, bc.front());
    }
    return out;
}

inline int rtd2_value(const Graph& g, ParamMemo& memo) {
    if (g.null()) return 0;
    if (g.num_vertices() == 1) return 1;
    auto comps = components(g);
    if (comps.size() > 1) {
        int best = 0;
        for (const auto& c : comps)
            best = std::max(best, rtd2_value(induced_subgraph(g, c).graph, memo));
        return best;
    }
    if (auto hit = memo.lookup(ParamMemo::kRtd2, g)) return *hit;

    int lb = g.num_edges() > 0 ? 2 : 1;
    if (memo.opts.use_td2_lower_bound) lb = std::max(lb, td2_value(g, memo));

    auto blocks = biconnected_blocks(g);
    int best = kInfDist;
    if (blocks.size() == 1) {
        for (Vertex v = 0; v < g.num_vertices() && best > lb; ++v)
            best = std::min(best, rtd2_value(remove_vertices(g, {v}).graph, memo) + 1);
    } else {
        for (const auto& [block, cut] : leaf_blocks(g)) {
            if (best <= lb) break;
            VertexSet inner = set_difference(block, {cut});
            int rest = rtd2_value(remove_vertices(g, inner).graph, memo);
            int side = rtd2_value(induced_subgraph(g, inner).graph, memo);
            best = std::min(best, std::max(rest, side + 1));
        }
    }
    memo.store(ParamMemo::kRtd2, g, best);
    return best;
}

// ---- witness reconstruction (original labels carried through to_orig) ----

template <typename ValueFn>
inline Vertex best_deletion(const Graph& g, ValueFn value_of) {
    int best = kInfDist;
    Vertex pick = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int val = value_of(remove_vertices(g, {v}).graph);
        if (val < best) {
            best = val;
            pick = v;
        }
    }
    return pick;
}

inline ParamWitness td_witness(const Graph& g, const std::vector<Vertex>& to_orig,
                               ParamMemo& memo) {
    if (g.null()) return {"null", -1, {}, {}};
    auto comps = components(g);
    if (comps.size() > 1) {
        ParamWitness w{"components", -1, {}, {}};
        for (const auto& c : comps) {
            auto sub = induced_subgraph(g, c);
            VertexSet orig;
            for (Vertex v : c) orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.parts.push_back(orig);
            std::vector<Vertex> sub_orig;
            for (Vertex v : sub.to_old) sub_orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.children.push_back(td_witness(sub.graph, sub_orig, memo));
        }
        return w;
    }
    Vertex v = best_deletion(g, [&](const Graph& h) { return td_value(h, memo); });
    auto rest = remove_vertices(g, {v});
    std::vector<Vertex> rest_orig;
    for (Vertex u : rest.to_old) rest_orig.push_back(to_orig[static_cast<size_t>(u)]);
    ParamWitness w{"delete", to_orig[static_cast<size_t>(v)], {}, {}};
    w.children.push_back(td_witness(rest.graph, rest_orig, memo));
    return w;
}

inline ParamWitness td2_witness(const Graph& g, const std::vector<Vertex>& to_orig,
                                ParamMemo& memo) {
    if (g.null()) return {"null", -1, {}, {}};
    auto blocks = biconnected_blocks(g);
    if (blocks.size() > 1) {
        ParamWitness w{"blocks", -1, {}, {}};
        for (const auto& b : blocks) {
            auto sub = induced_subgraph(g, b);
            VertexSet orig;
            for (Vertex v : b) orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.parts.push_back(orig);
            std::vector<Vertex> sub_orig;
            for (Vertex v : sub.to_old) sub_orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.children.push_back(td2_witness(sub.graph, sub_orig, memo));
        }
        return w;
    }
    Vertex v = best_deletion(g, [&](const Graph& h) { return td2_value(h, memo); });
    auto rest = remove_vertices(g, {v});
    std::vector<Vertex> rest_orig;
    for (Vertex u : rest.to_old) rest_orig.push_back(to_orig[static_cast<size_t>(u)]);
    ParamWitness w{"delete", to_orig[static_cast<size_t>(v)], {}, {}};
    w.children.push_back(td2_witness(rest.graph, rest_orig, memo));
    return w;
}

inline ParamWitness rtd2_witness(const Graph& g, const std::vector<Vertex>& to_orig,
                                 ParamMemo& memo) {
    if (g.null()) return {"null", -1, {}, {}};
    if (g.num_vertices() == 1) return {"single", to_orig[0], {}, {}};
    auto comps = components(g);
    if (comps.size() > 1) {
        ParamWitness w{"components", -1, {}, {}};
        for (const auto& c : comps) {
            auto sub = induced_subgraph(g, c);
            VertexSet orig;
            for (Vertex v : c) orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.parts.push_back(orig);
            std::vector<Vertex> sub_orig;
            for (Vertex v : sub.to_old) sub_orig.push_back(to_orig[static_cast<size_t>(v)]);
            w.children.push_back(rtd2_witness(sub.graph, sub_orig, memo));
        }
        return w;
    }
    auto blocks = biconnected_blocks(g);
    if (blocks.size() == 1) {
        Vertex v = best_deletion(g, [&](const Graph& h) { return rtd2_value(h, memo); });
        auto rest = remove_vertices(g, {v});
        std::vector<Vertex> rest_orig;
        for (Vertex u : rest.to_old) rest_orig.push_back(to_orig[static_cast<size_t>(u)]);
        ParamWitness w{"delete", to_orig[static_cast<size_t>(v)], {}, {}};
        w.children.push_back(rtd2_witness(rest.graph, rest_orig, memo));
        return w;
    }
    int best = kInfDist;
    VertexSet best_block;
    Vertex best_cut = -1;
    for (const auto& [block, cut] : leaf_blocks(g)) {
        VertexSet inner = set_difference(block, {cut});
        int rest = rtd2_value(remove_vertices(g, inner).graph, memo);
        int side = rtd2_value(induced_subgraph(g, inner).graph, memo);
        int val = std::max(rest, side + 1);
        if (val < best) {
            best = val;
            best_block = block;
            best_cut = cut;
        }
    }
    VertexSet inner = set_difference(best_block, {best_cut});
    auto rest = remove_vertices(g, inner);
    auto side = induced_subgraph(g, inner);
    std::vector<Vertex> rest_orig, side_orig;
    for (Vertex u : rest.to_old) rest_orig.push_back(to_orig[static_cast<size_t>(u)]);
    for (Vertex u : side.to_old) side_orig.push_back(to_orig[static_cast<size_t>(u)]);
    VertexSet block_orig;
    for (Vertex u : best_block) block_orig.push_back(to_orig[static_cast<size_t>(u)]);
    ParamWitness w{"leaf-block", to_orig[static_cast<size_t>(best_cut)], {block_orig}, {}};
    w.children.push_back(rtd2_witness(rest.graph, rest_orig, memo));
    w.children.push_back(rtd2_witness(side.graph, side_orig, memo));
    return w;
}

}  // namespace detail

// ---- public entry points --------------------------------------------------

inline ParamCertificate treedepth(const Graph& g, ParamMemo* memo = nullptr) {
    ParamMemo local;
    ParamMemo& m = memo ? *memo : local;
    ParamCertificate cert;
    cert.parameter = "td";
    cert.value = detail::td_value(g, m);
    cert.witness = detail::td_witness(g, all_vertices(g), m);
    return cert;
}

inline ParamCertificate twodepth(const Graph& g, ParamMemo* memo = nullptr) {
    ParamMemo local;
    ParamMemo& m = memo ? *memo : local;
    ParamCertificate cert;
    cert.parameter = "td2";
    cert.value = detail::td2_value(g, m);
    cert.witness = detail::td2_witness(g, all_vertices(g), m);
    return cert;
}

inline ParamCertificate rooted_twodepth(const Graph& g, ParamMemo* memo = nullptr) {
    ParamMemo local;
    ParamMemo& m = memo ? *memo : local;
    ParamCertificate cert;
    cert.parameter = "rtd2";
    cert.value = detail::rtd2_value(g, m);
    cert.witness = detail::rtd2_witness(g, all_vertices(g), m);
    return cert;
}

// value-only fast paths (no witness reconstruction)
inline int treedepth_value(const Graph& g, ParamMemo& memo) { return detail::td_value(g, memo); }
inline int twodepth_value(const Graph& g, ParamMemo& memo) { return detail::td2_value(g, memo); }
inline int rooted_twodepth_value(const Graph& g, ParamMemo& memo) {
    return detail::rtd2_value(g, memo);
}

// ---- witness replay (independent validator) --------------------------------

namespace detail {

inline int replay_depth_witness(const Graph& g0, const VertexSet& scope, const ParamWitness& w,
                                const std::string& parameter) {
    auto local = induced_subgraph(g0, scope);
    const Graph& g = local.graph;
    if (w.kind == "null") {
        if (!g.null()) throw Error("witness replay: expected null graph");
        return 0;
    }
    if (w.kind == "single") {
        if (parameter != "rtd2" || g.num_vertices() != 1)
            throw Error("witness replay: bad single node");
        return 1;
    }
    if (w.kind == "components" || w.kind == "blocks") {
        bool want_blocks = w.kind == "blocks";
        if (want_blocks && parameter != "td2") throw Error("witness replay: blocks in " + parameter);
        if (!want_blocks && parameter == "td2") throw Error("witness replay: components in td2");
        std::vector<VertexSet> expected;
        if (want_blocks) {
            for (const auto& b : biconnected_blocks(g)) {
                VertexSet orig;
                for (Vertex v : b) orig.push_back(local.to_old[static_cast<size_t>(v)]);
                expected.push_back(orig);
            }
        } else {
            for (const auto& c : components(g)) {
                VertexSet orig;
                for (Vertex v : c) orig.push_back(local.to_old[static_cast<size_t>(v)]);
                expected.push_back(orig);
            }
        }
        if (expected.size() < 2) throw Error("witness replay: split of a single part");
        if (w.parts != expected || w.children.size() != expected.size())
            throw Error("witness replay: parts mismatch");
        int best = 0;
        for (size_t i = 0; i < expected.size(); ++i)
            best = std::max(best,
                            replay_depth_witness(g0, expected[i], w.children[i], parameter));
        return best;
    }
    if (w.kind == "delete") {
        if (w.children.size() != 1) throw Error("witness replay: delete arity");
        if (parameter == "td") {
            if (!is_connected(g)) throw Error("witness replay: delete on disconnected graph");
        } else {
            if (biconnected_blocks(g).size() != 1)
                throw Error("witness replay: delete on multiblock graph");
        }
        if (!set_contains(scope, w.vertex)) throw Error("witness replay: vertex outside scope");
        return replay_depth_witness(g0, set_difference(scope, {w.vertex}), w.children[0],
                                    parameter) +
               1;
    }
    if (w.kind == "leaf-block") {
        if (parameter != "rtd2" || w.parts.size() != 1 || w.children.size() != 2)
            throw Error("witness replay: bad leaf-block node");
        const VertexSet& block_orig = w.parts[0];
        VertexSet block_local;
        for (Vertex v : block_orig) {
            if (!set_contains(scope, v)) throw Error("witness replay: block outside scope");
            block_local.push_back(local.to_new[static_cast<size_t>(v)]);
        }
        block_local = sorted_unique(std::move(block_local));
        auto blocks = biconnected_blocks(g);
        if (std::find(blocks.begin(), blocks.end(), block_local) == blocks.end())
            throw Error("witness replay: not a block");
        if (!set_contains(block_orig, w.vertex)) throw Error("witness replay: cut not in block");
        VertexSet inner = set_difference(block_orig, {w.vertex});
        if (inner.empty()) throw Error("witness replay: empty block side");
        int rest = replay_depth_witness(g0, set_difference(scope, inner), w.children[0],
                                        parameter);
        int side = replay_depth_witness(g0, inner, w.children[1], parameter);
        return std::max(rest, side + 1);
    }
    throw Error("witness replay: unknown kind " + w.kind);
}

}  // namespace detail

// Recomputes the certified value from the recorded choices, validating every
// structural claim on the way. Throws on any mismatch.
inline int replay_witness(const Graph& g, const ParamCertificate& cert) {
    if (cert.parameter == "td" || cert.parameter == "td2" || cert.parameter == "rtd2") {
        const auto& w = std::get<ParamWitness>(cert.witness);
        return detail::replay_depth_witness(g, all_vertices(g), w, cert.parameter);
    }
    if (cert.parameter == "vc") {
        const auto& cover = std::get<VertexSet>(cert.witness);
        for (const auto& [u, v] : g.edges())
            if (!set_contains(cover, u) && !set_contains(cover, v))
                throw Error("witness replay: uncovered edge");
        return static_cast<int>(cover.size());
    }
    if (cert.parameter == "tw") {
        const auto& dec = std::get<TreeDecomposition>(cert.witness);
        if (!validate_tree_decomposition(g, dec).valid)
            throw Error("witness replay: invalid tree decomposition");
        return dec.width();
    }
    if (cert.parameter == "pw") {
        const auto& dec = std::get<PathDecomposition>(cert.witness);
        if (!validate_path_decomposition(g, dec).valid)
            throw Error("witness replay: invalid path decomposition");
        return dec.width();
    }
    throw Error("witness replay: unknown parameter " + cert.parameter);
}

// ---- vertex cover -----------------------------------------------------------

namespace detail {

inline VertexSet vc_branch(const Graph& g, const std::vector<Vertex>& to_orig) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0 && (pick == -1 || g.degree(v) > g.degree(pick))) pick = v;
    if (pick == -1) return {};

    auto without_v = remove_vertices(g, {pick});
    std::vector<Vertex> orig_v;
    for (Vertex u : without_v.to_old) orig_v.push_back(to_orig[static_cast<size_t>(u)]);
    VertexSet take_v = vc_branch(without_v.graph, orig_v);
    take_v.push_back(to_orig[static_cast<size_t>(pick)]);
    take_v = sorted_unique(std::move(take_v));

    VertexSet closed = g.neighbors(pick);
    closed.push_back(pick);
    auto without_n = remove_vertices(g, closed);
    std::vector<Vertex> orig_n;
    for (Vertex u : without_n.to_old) orig_n.push_back(to_orig[static_cast<size_t>(u)]);
    VertexSet take_n = vc_branch(without_n.graph, orig_n);
    for (Vertex u : g.neighbors(pick)) take_n.push_back(to_orig[static_cast<size_t>(u)]);
    take_n = sorted_unique(std::move(take_n));

    return take_v.size() <= take_n.size() ? take_v : take_n;
}

}  // namespace detail

inline ParamCertificate vertex_cover_number(const Graph& g) {
    ParamCertificate cert;
    cert.parameter = "vc";
    VertexSet cover = detail::vc_branch(g, all_vertices(g));
    cert.value = static_cast<int>(cover.size());
    cert.witness = cover;
    return cert;
}

// ---- exact treewidth / pathwidth over vertex subsets ------------------------

namespace detail {

// Vertices outside S u {v} reachable from v through S.
inline VertexSet subset_reach(const Graph& g, unsigned S, Vertex v) {
    std::vector<char> seen(static_cast<size_t>(g.num_vertices()), 0);
    std::vector<Vertex> stack{v};
    seen[static_cast<size_t>(v)] = 1;
    VertexSet out;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            if (S >> w & 1u) {
                stack.push_back(w);
            } else if (w != v) {
                out.push_back(w);
            }
        }
    }
    return sorted_unique(std::move(out));
}

inline int boundary_size(const Graph& g, unsigned S) {
    int cnt = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!(S >> v & 1u)) continue;
        for (Vertex w : g.neighbors(v))
            if (!(S >> w & 1u)) {
                ++cnt;
                break;
            }
    }
    return cnt;
}

}  // namespace detail

enum class WidthKind { tw, pw };

inline ParamCertificate treewidth_pathwidth_exact(const Graph& g, WidthKind which, int cap = 14) {
    if (g.num_vertices() > cap)
        throw SizeLimit("subset dynamic program capped at " + std::to_string(cap) + " vertices");
    ParamCertificate cert;
    cert.parameter = which == WidthKind::tw ? "tw" : "pw";
    int n = g.num_vertices();
    if (n == 0) {
        cert.value = -1;
        if (which == WidthKind::tw) {
            TreeDecomposition td;
            td.tree = Graph(1);
            td.bags = {VertexSet{}};
            cert.witness = td;
        } else {
            PathDecomposition pd;
            pd.bags = {VertexSet{}};
            cert.witness = pd;
        }
        return cert;
    }

    unsigned full = (n == 32 ? ~0u : (1u << n) - 1u);
    std::vector<int> dp(static_cast<size_t>(full) + 1, kInfDist);
    dp[0] = which == WidthKind::tw ? -1 : 0;
    for (unsigned S = 1; S <= full; ++S) {
        int cost_here = which == WidthKind::pw ? detail::boundary_size(g, S) : 0;
        int best = kInfDist;
        for (Vertex v = 0; v < n; ++v) {
            if (!(S >> v & 1u)) continue;
            unsigned prev = S & ~(1u << v);
            int sub = dp[prev];
            if (sub == kInfDist) continue;
            int step = which == WidthKind::tw
                           ? std::max(sub, static_cast<int>(detail::subset_reach(g, prev, v).size()))
                           : sub;
            best = std::min(best, step);
        }
        dp[S] = which == WidthKind::pw ? std::max(best, cost_here) : best;
    }
    cert.value = dp[full];

    // reconstruct the elimination / placement order, last pick first
    std::vector<Vertex> order;
    unsigned S = full;
    while (S) {
        for (Vertex v = 0; v < n; ++v) {
            if (!(S >> v & 1u)) continue;
            unsigned prev = S & ~(1u << v);
            if (dp[prev] == kInfDist) continue;
            int step;
            if (which == WidthKind::tw) {
                step = std::max(dp[prev],
                                static_cast<int>(detail::subset_reach(g, prev, v).size()));
            } else {
                step = std::max(dp[prev], detail::boundary_size(g, S));
            }
            if (step == dp[S]) {
                order.push_back(v);
                S = prev;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());

    if (which == WidthKind::tw) {
        // fill-in bags along the elimination order
        TreeDecomposition td;
        std::vector<VertexSet> bags(static_cast<size_t>(n));
        std::vector<int> elim_pos(static_cast<size_t>(n));
        unsigned done = 0;
        for (int i = 0; i < n; ++i) {
            Vertex v = order[static_cast<size_t>(i)];
            elim_pos[static_cast<size_t>(v)] = i;
            VertexSet up = detail::subset_reach(g, done, v);
            bags[static_cast<size_t>(i)] = sorted_unique(set_union(up, {v}));
            done |= 1u << v;
        }
        Graph tree(n);
        for (int i = 0; i < n; ++i) {
            Vertex v = order[static_cast<size_t>(i)];
            VertexSet up = set_difference(bags[static_cast<size_t>(i)], {v});
            if (up.empty()) {
                if (i + 1 < n) tree.add_edge(i, i + 1);
            } else {
                int parent = kInfDist;
                for (Vertex w : up) parent = std::min(parent, elim_pos[static_cast<size_t>(w)]);
                tree.add_edge(i, parent);
            }
        }
        tree.finalize();
        td.tree = std::move(tree);
        td.bags = std::move(bags);
        cert.witness = td;
    } else {
        PathDecomposition pd;
        unsigned placed = 0;
        for (int i = 0; i < n; ++i) {
            Vertex v = order[static_cast<size_t>(i)];
            VertexSet bag{v};
            for (Vertex u = 0; u < n; ++u) {
                if (!(placed >> u & 1u)) continue;
                for (Vertex w : g.neighbors(u))
                    if (!(placed >> w & 1u)) {
                        bag.push_back(u);
                        break;
                    }
            }
            pd.bags.push_back(sorted_unique(std::move(bag)));
            placed |= 1u << v;
        }
        cert.witness = pd;
    }
    return cert;
}

}  // namespace wcolib

#endif  // WCOLIB_PARAMETERS_HPP
