#pragma once

// Pre-mining projection of a dataset onto user-selected constructs. Always
// operates on a copy; the pristine store is what deepening queries.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmining/graph.hpp"

namespace cmining {

struct FilterSpec {
    // Keep only nodes carrying at least one of these labels (empty = keep all).
    std::set<std::string> select_labels;
    // Drop nodes carrying any of these labels.
    std::set<std::string> remove_labels;
    std::set<std::string> remove_edge_labels;
    // Strip name/description properties from the mining copy.
    bool drop_properties = true;

    bool empty() const {
        return select_labels.empty() && remove_labels.empty() &&
               remove_edge_labels.empty();
    }

    void validate() const {
        for (const std::string& l : select_labels)
            if (remove_labels.count(l))
                throw std::invalid_argument(
                    "filter: label both selected and removed: " + l);
    }
};

namespace detail {

inline bool node_survives(const Node& n, const FilterSpec& spec) {
    for (const std::string& l : n.construct_labels)
        if (spec.remove_labels.count(l)) return false;
    if (spec.select_labels.empty()) return true;
    for (const std::string& l : n.construct_labels)
        if (spec.select_labels.count(l)) return true;
    return false;
}

}  // namespace detail

inline ModelGraph apply_filter(const ModelGraph& graph, const FilterSpec& spec) {
    spec.validate();
    ModelGraph out;
    out.model_id = graph.model_id;
    std::vector<int> remap(graph.nodes.size(), -1);
    for (const Node& n : graph.nodes) {
        if (!detail::node_survives(n, spec)) continue;
        remap[n.id] = static_cast<int>(out.nodes.size());
        Node copy = n;
        copy.id = static_cast<NodeId>(out.nodes.size());
        if (spec.drop_properties) copy.properties.clear();
        out.nodes.push_back(std::move(copy));
    }
    for (const Edge& e : graph.edges) {
        if (spec.remove_edge_labels.count(e.label)) continue;
        int a = remap[e.endpoint_a], b = remap[e.endpoint_b];
        if (a < 0 || b < 0) continue;  // incident node removed
        out.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b), e.label);
    }
    return out;
}

inline GraphDataset apply_filter(const GraphDataset& dataset,
                                 const FilterSpec& spec) {
    GraphDataset out;
    out.graphs.reserve(dataset.graphs.size());
    for (const ModelGraph& g : dataset.graphs)
        out.graphs.push_back(apply_filter(g, spec));
    return out;
}

// Per-model node/edge deltas between an unfiltered and a filtered dataset.
inline std::string filter_report(const GraphDataset& before,
                                 const GraphDataset& after) {
    if (before.graphs.size() != after.graphs.size())
        throw std::invalid_argument("filter_report: dataset sizes differ");
    std::ostringstream out;
    out << "model_id\tnodes_removed\tedges_removed\n";
    for (std::size_t i = 0; i < before.graphs.size(); ++i) {
        const ModelGraph& b = before.graphs[i];
        const ModelGraph& a = after.graphs[i];
        if (b.model_id != a.model_id)
            throw std::invalid_argument("filter_report: model_id mismatch at " +
                                        std::to_string(i));
        out << b.model_id << '\t' << (b.node_count() - a.node_count()) << '\t'
            << (b.edge_count() - a.edge_count()) << "\n";
    }
    return out.str();
}

}  // namespace cmining
