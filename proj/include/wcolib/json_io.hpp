#ifndef WCOLIB_JSON_IO_HPP
#define WCOLIB_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "wcolib/models.hpp"
#include "wcolib/ordering.hpp"
#include "wcolib/parameters.hpp"
#include "wcolib/structures.hpp"

namespace wcolib {

using Json = nlohmann::ordered_json;

inline Json to_json(const WcolCertificate& c) {
    Json j;
    j["r"] = c.r;
    j["value"] = c.value;
    j["exact"] = c.exact;
    j["ordering"] = c.ordering.sequence;
    j["witness_vertex"] = c.witness_vertex;
    j["witness_set"] = c.witness_set;
    return j;
}

// witness trees as nested arrays of steps
inline Json to_json(const ParamWitness& w) {
    Json j = Json::array();
    j.push_back(w.kind);
    if (w.kind == "single" || w.kind == "delete" || w.kind == "leaf-block") j.push_back(w.vertex);
    if (!w.parts.empty()) {
        Json parts = Json::array();
        for (const auto& p : w.parts) parts.push_back(p);
        j.push_back(parts);
    }
    if (!w.children.empty()) {
        Json kids = Json::array();
        for (const auto& c : w.children) kids.push_back(to_json(c));
        j.push_back(kids);
    }
    return j;
}

inline Json to_json(const TreeDecomposition& td) {
    Json j;
    j["tree_edges"] = Json::array();
    for (const auto& [a, b] : td.tree.edges()) j["tree_edges"].push_back(Json::array({a, b}));
    j["bags"] = td.bags;
    j["width"] = td.width();
    return j;
}

inline Json to_json(const PathDecomposition& pd) {
    Json j;
    j["bags"] = pd.bags;
    j["width"] = pd.width();
    return j;
}

inline Json to_json(const ParamCertificate& c) {
    Json j;
    j["parameter"] = c.parameter;
    j["value"] = c.value;
    if (std::holds_alternative<ParamWitness>(c.witness))
        j["witness"] = to_json(std::get<ParamWitness>(c.witness));
    else if (std::holds_alternative<VertexSet>(c.witness))
        j["witness"] = std::get<VertexSet>(c.witness);
    else if (std::holds_alternative<TreeDecomposition>(c.witness))
        j["witness"] = to_json(std::get<TreeDecomposition>(c.witness));
    else if (std::holds_alternative<PathDecomposition>(c.witness))
        j["witness"] = to_json(std::get<PathDecomposition>(c.witness));
    return j;
}

inline Json to_json(const Model& m) {
    Json j;
    j["pattern_n"] = m.pattern_n;
    j["branch"] = m.branch;
    return j;
}

inline Json to_json(const RichModel& rm) {
    Json j = to_json(rm.model);
    j["anchors"] = rm.anchors;
    return j;
}

inline SubgraphFamily family_from_json(const Json& j) {
    SubgraphFamily fam;
    for (const auto& member : j) fam.members.push_back(sorted_unique(member.get<VertexSet>()));
    return fam;
}

inline Json to_json(const SubgraphFamily& fam) {
    Json j = Json::array();
    for (const auto& m : fam.members) j.push_back(m);
    return j;
}

}  // namespace wcolib

#endif  // WCOLIB_JSON_IO_HPP
