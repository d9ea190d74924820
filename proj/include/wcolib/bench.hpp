#ifndef WCOLIB_BENCH_HPP
#define WCOLIB_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "wcolib/families.hpp"
#include "wcolib/graph.hpp"
#include "wcolib/models.hpp"
#include "wcolib/parameters.hpp"
#include "wcolib/wcol_exact.hpp"

namespace wcolib {

struct BenchCase {
    std::string name;
    double ms = 0.0;
    std::int64_t nodes = 0;
    std::string outcome;
};

struct BenchReport {
    std::string target;
    std::vector<BenchCase> cases;
};

namespace detail {

template <typename Fn>
inline BenchCase timed(const std::string& name, Fn&& fn) {
    BenchCase c;
    c.name = name;
    auto t0 = std::chrono::steady_clock::now();
    auto [outcome, nodes] = fn();
    auto t1 = std::chrono::steady_clock::now();
    c.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    c.outcome = outcome;
    c.nodes = nodes;
    return c;
}

}  // namespace detail

inline BenchReport bench(const std::string& target) {
    BenchReport rep;
    rep.target = target;
    if (target == "wcol-exact") {
        for (int n : {8, 10, 12}) {
            rep.cases.push_back(detail::timed(
                "wcol_2(P_" + std::to_string(n) + ") exact", [&]() {
                    SearchStats stats;
                    auto cert = wcol_exact(path_graph(n), 2, 50'000'000, &stats);
                    return std::pair<std::string, std::int64_t>(
                        "value=" + std::to_string(cert.value) +
                            (cert.exact ? " exact" : " inexact"),
                        stats.nodes);
                }));
        }
        rep.cases.push_back(detail::timed("wcol_2(G_{2,1}) exact", [&]() {
            SearchStats stats;
            auto cert = wcol_exact(grohe_graph(2, 1).graph, 2, 200'000'000, &stats);
            return std::pair<std::string, std::int64_t>(
                "value=" + std::to_string(cert.value) + (cert.exact ? " exact" : " inexact"),
                stats.nodes);
        }));
        return rep;
    }
    if (target == "rtd2") {
        rep.cases.push_back(detail::timed("rtd2(H_{4,4})", [&]() {
            ParamMemo memo;
            int v = rooted_twodepth_value(gadget_hkl(4, 4).graph, memo);
            return std::pair<std::string, std::int64_t>("value=" + std::to_string(v), 0);
        }));
        rep.cases.push_back(detail::timed("rtd2(G_{1,2})", [&]() {
            ParamMemo memo;
            int v = rooted_twodepth_value(grohe_graph(1, 2).graph, memo);
            return std::pair<std::string, std::int64_t>("value=" + std::to_string(v), 0);
        }));
        return rep;
    }
    if (target == "find-model") {
        rep.cases.push_back(detail::timed("K_5 in 3x3 grid", [&]() {
            auto res = find_model(complete_graph(5), grid_graph(3, 3));
            std::string out = res.status == SearchStatus::found
                                  ? "found"
                                  : (res.status == SearchStatus::absent ? "proven absent"
                                                                        : "budget exhausted");
            return std::pair<std::string, std::int64_t>(out, res.nodes);
        }));
        rep.cases.push_back(detail::timed("K_3 in C_5", [&]() {
            auto res = find_model(complete_graph(3), cycle_graph(5));
            std::string out = res.status == SearchStatus::found ? "found" : "absent";
            return std::pair<std::string, std::int64_t>(out, res.nodes);
        }));
        return rep;
    }
    throw UnknownTarget("unknown bench target " + target);
}

inline std::vector<std::string> bench_targets() { return {"wcol-exact", "rtd2", "find-model"}; }

}  // namespace wcolib

#endif  // WCOLIB_BENCH_HPP
