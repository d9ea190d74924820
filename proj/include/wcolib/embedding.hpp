#ifndef WCOLIB_EMBEDDING_HPP
#define WCOLIB_EMBEDDING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wcolib/families.hpp"
#include "wcolib/graph.hpp"
#include "wcolib/models.hpp"
#include "wcolib/parameters.hpp"

namespace wcolib {

// Probe for the least t such that g is a subgraph of G_{r,t-1} for some
// r <= r_budget. "confirmed" when the found t equals rtd2(g); "consistent"
// when the budget-bounded sweep below t found nothing but could not certify
// exhaustiveness (oversize hosts are skipped, searches are node-budgeted).
struct EmbeddingProbe {
    int t = 0;
    std::string status;  // confirmed | consistent
    int found_r = -1;
    std::vector<Vertex> embedding;
    bool lower_sweep_complete = true;  // every r below t searched to completion
};

inline EmbeddingProbe rtd2_by_embedding(const Graph& g, int r_budget,
                                        std::int64_t node_budget = 20'000'000,
                                        long long host_cap = 500'000,
                                        ParamMemo* memo = nullptr) {
    if (g.num_edges() == 0) throw NoEdge();
    if (g.num_vertices() > 12) throw SizeLimit("embedding probe is for small patterns");

    ParamMemo local;
    ParamMemo& m = memo ? *memo : local;

    EmbeddingProbe probe;
    std::vector<bool> level_complete;  // per t, whether the whole r-sweep was conclusive
    for (int t = 2; t <= std::max(2, g.num_vertices()); ++t) {
        bool complete = true;
        for (int r = 0; r <= r_budget; ++r) {
            SizePrediction pred = predict_grohe(r, t - 1);
            if (pred.vertices > host_cap) {
                complete = false;
                continue;
            }
            auto host = grohe_graph(r, t - 1, 0, host_cap);
            auto res = is_subgraph(g, host.graph, node_budget);
            if (res.status == SearchStatus::found) {
                probe.t = t;
                probe.found_r = r;
                probe.embedding = *res.value;
                for (bool c : level_complete)
                    if (!c) probe.lower_sweep_complete = false;
                int rtd2 = rooted_twodepth_value(g, m);
                probe.status = rtd2 == t ? "confirmed" : "consistent";
                return probe;
            }
            if (res.status == SearchStatus::budget_exhausted) complete = false;
        }
        level_complete.push_back(complete);
    }
    throw SizeLimit("no embedding found within the r budget");
}

}  // namespace wcolib

#endif  // WCOLIB_EMBEDDING_HPP
