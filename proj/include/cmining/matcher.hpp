#pragma once

// Deepening: running a pattern as a query over stored model graphs and
// enumerating its occurrences. Two embeddings count as one occurrence when
// they induce the same node/edge image in the model, so automorphic
// re-mappings collapse.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cmining/graph.hpp"

namespace cmining {

enum class LabelSemantics {
    // Pattern and model nodes must carry identical construct-label sets;
    // this is what mining over composite labels implies.
    kExact,
    // Pattern labels must be a subset of the model node's labels; used for
    // deepening against the unfiltered store.
    kSubset,
};

struct Occurrence {
    int pattern_index = -1;
    std::string model_id;
    std::map<NodeId, NodeId> node_binding;  // pattern node -> model node
    std::map<NodeId, std::map<std::string, std::string>> bound_properties;

    std::vector<NodeId> sorted_image() const {
        std::vector<NodeId> ids;
        ids.reserve(node_binding.size());
        for (const auto& [p, m] : node_binding) ids.push_back(m);
        std::sort(ids.begin(), ids.end());
        return ids;
    }
};

struct OccurrenceList {
    std::vector<Occurrence> occurrences;
    bool truncated = false;  // hit the enumeration cap
};

inline constexpr std::size_t kOccurrenceCap = 10000;

namespace detail {

inline bool labels_match(const Node& pattern_node, const Node& model_node,
                         LabelSemantics semantics) {
    if (semantics == LabelSemantics::kExact)
        return pattern_node.construct_labels == model_node.construct_labels;
    return std::includes(model_node.construct_labels.begin(),
                         model_node.construct_labels.end(),
                         pattern_node.construct_labels.begin(),
                         pattern_node.construct_labels.end());
}

// Match order: start anywhere, then always extend along pattern edges so
// partial assignments stay connected.
inline std::vector<NodeId> connected_match_order(const ModelGraph& pattern) {
    std::vector<NodeId> order;
    std::vector<bool> seen(pattern.nodes.size(), false);
    for (NodeId start = 0; start < pattern.nodes.size(); ++start) {
        if (seen[start]) continue;
        std::vector<NodeId> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (const Edge& e : pattern.edges) {
                NodeId other;
                if (e.endpoint_a == v) other = e.endpoint_b;
                else if (e.endpoint_b == v) other = e.endpoint_a;
                else continue;
                if (!seen[other]) {
                    seen[other] = true;
                    stack.push_back(other);
                }
            }
        }
    }
    return order;
}

struct ImageKey {
    std::vector<NodeId> nodes;
    std::vector<std::tuple<NodeId, NodeId, std::string>> edges;
    auto operator<=>(const ImageKey&) const = default;
};

}  // namespace detail

// All distinct occurrences of `pattern` in `model`, deduplicated by image
// and ordered by sorted bound node ids. Enumeration stops (flagged) at
// kOccurrenceCap distinct images.
inline OccurrenceList find_occurrences(const ModelGraph& pattern,
                                       const ModelGraph& model,
                                       LabelSemantics semantics,
                                       int pattern_index = -1) {
    OccurrenceList result;
    if (pattern.nodes.empty() || pattern.nodes.size() > model.nodes.size())
        return result;

    std::vector<NodeId> order = detail::connected_match_order(pattern);
    std::vector<int> assignment(pattern.nodes.size(), -1);
    std::vector<bool> model_used(model.nodes.size(), false);
    std::set<detail::ImageKey> images;

    // Pattern edges incident to each node, for incremental consistency checks.
    std::vector<std::vector<const Edge*>> incident(pattern.nodes.size());
    for (const Edge& e : pattern.edges) {
        incident[e.endpoint_a].push_back(&e);
        incident[e.endpoint_b].push_back(&e);
    }

    auto record = [&]() {
        detail::ImageKey key;
        for (int m : assignment) key.nodes.push_back(static_cast<NodeId>(m));
        std::sort(key.nodes.begin(), key.nodes.end());
        for (const Edge& e : pattern.edges) {
            NodeId a = static_cast<NodeId>(assignment[e.endpoint_a]);
            NodeId b = static_cast<NodeId>(assignment[e.endpoint_b]);
            key.edges.push_back({std::min(a, b), std::max(a, b), e.label});
        }
        std::sort(key.edges.begin(), key.edges.end());
        if (!images.insert(std::move(key)).second) return;
        if (images.size() > kOccurrenceCap) {
            result.truncated = true;
            return;
        }
        Occurrence occ;
        occ.pattern_index = pattern_index;
        occ.model_id = model.model_id;
        for (NodeId p = 0; p < pattern.nodes.size(); ++p) {
            NodeId m = static_cast<NodeId>(assignment[p]);
            occ.node_binding[p] = m;
            if (!model.nodes[m].properties.empty())
                occ.bound_properties[p] = model.nodes[m].properties;
        }
        result.occurrences.push_back(std::move(occ));
    };

    auto backtrack = [&](auto&& self, std::size_t depth) -> void {
        if (result.truncated) return;
        if (depth == order.size()) {
            record();
            return;
        }
        NodeId p = order[depth];
        for (NodeId m = 0; m < model.nodes.size(); ++m) {
            if (model_used[m]) continue;
            if (!detail::labels_match(pattern.nodes[p], model.nodes[m], semantics))
                continue;
            bool consistent = true;
            for (const Edge* e : incident[p]) {
                NodeId other = e->endpoint_a == p ? e->endpoint_b : e->endpoint_a;
                if (assignment[other] == -1) continue;
                if (!model.has_edge(m, static_cast<NodeId>(assignment[other]),
                                    e->label)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            assignment[p] = static_cast<int>(m);
            model_used[m] = true;
            self(self, depth + 1);
            assignment[p] = -1;
            model_used[m] = false;
        }
    };
    backtrack(backtrack, 0);

    std::sort(result.occurrences.begin(), result.occurrences.end(),
              [](const Occurrence& a, const Occurrence& b) {
                  return a.sorted_image() < b.sorted_image();
              });
    return result;
}

// Exhaustive oracle: tries every injective node mapping and keeps those
// satisfying the occurrence invariants, deduplicated by image. Intended for
// tests only; sizes beyond a dozen nodes are rejected.
inline OccurrenceList brute_force_occurrences(const ModelGraph& pattern,
                                              const ModelGraph& model,
                                              LabelSemantics semantics,
                                              int pattern_index = -1) {
    OccurrenceList result;
    if (pattern.nodes.empty() || pattern.nodes.size() > model.nodes.size())
        return result;
    if (model.nodes.size() > 12)
        throw std::invalid_argument("brute_force_occurrences: model too large");

    std::vector<NodeId> chosen;
    std::vector<bool> used(model.nodes.size(), false);
    std::set<detail::ImageKey> images;

    auto valid = [&]() {
        for (NodeId p = 0; p < pattern.nodes.size(); ++p)
            if (!detail::labels_match(pattern.nodes[p], model.nodes[chosen[p]],
                                      semantics))
                return false;
        for (const Edge& e : pattern.edges)
            if (!model.has_edge(chosen[e.endpoint_a], chosen[e.endpoint_b], e.label))
                return false;
        return true;
    };

    auto rec = [&](auto&& self) -> void {
        if (chosen.size() == pattern.nodes.size()) {
            if (!valid()) return;
            detail::ImageKey key;
            key.nodes.assign(chosen.begin(), chosen.end());
            std::sort(key.nodes.begin(), key.nodes.end());
            for (const Edge& e : pattern.edges) {
                NodeId a = chosen[e.endpoint_a], b = chosen[e.endpoint_b];
                key.edges.push_back({std::min(a, b), std::max(a, b), e.label});
            }
            std::sort(key.edges.begin(), key.edges.end());
            if (!images.insert(std::move(key)).second) return;
            Occurrence occ;
            occ.pattern_index = pattern_index;
            occ.model_id = model.model_id;
            for (NodeId p = 0; p < pattern.nodes.size(); ++p) {
                occ.node_binding[p] = chosen[p];
                if (!model.nodes[chosen[p]].properties.empty())
                    occ.bound_properties[p] = model.nodes[chosen[p]].properties;
            }
            result.occurrences.push_back(std::move(occ));
            return;
        }
        for (NodeId m = 0; m < model.nodes.size(); ++m) {
            if (used[m]) continue;
            used[m] = true;
            chosen.push_back(m);
            self(self);
            chosen.pop_back();
            used[m] = false;
        }
    };
    rec(rec);

    std::sort(result.occurrences.begin(), result.occurrences.end(),
              [](const Occurrence& a, const Occurrence& b) {
                  return a.sorted_image() < b.sorted_image();
              });
    return result;
}

struct FrequencyReport {
    int pattern_index = -1;
    std::map<std::string, std::size_t> per_model_counts;
    std::size_t total_frequency = 0;
    std::size_t model_frequency = 0;
    bool truncated = false;
};

inline FrequencyReport frequency_report(const ModelGraph& pattern,
                                        const GraphDataset& store,
                                        LabelSemantics semantics,
                                        int pattern_index = -1) {
    FrequencyReport report;
    report.pattern_index = pattern_index;
    for (const ModelGraph& model : store.graphs) {
        OccurrenceList occs = find_occurrences(pattern, model, semantics,
                                               pattern_index);
        std::size_t n = occs.occurrences.size();
        report.per_model_counts[model.model_id] = n;
        report.total_frequency += n;
        if (n > 0) ++report.model_frequency;
        report.truncated = report.truncated || occs.truncated;
    }
    return report;
}

}  // namespace cmining
