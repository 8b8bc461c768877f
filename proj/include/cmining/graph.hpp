#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmining {

using NodeId = std::uint32_t;

// Edge role labels produced by reification.
inline constexpr const char* kEdgeSource = "source";
inline constexpr const char* kEdgeTarget = "target";
inline constexpr const char* kEdgeGeneral = "general";
inline constexpr const char* kEdgeSpecific = "specific";
inline constexpr const char* kEdgeCardinalities = "cardinalities";

struct Node {
    NodeId id = 0;
    // Ordered set of construct labels (stereotypes, types, cardinality
    // values, end markers). Never contains properties.
    std::set<std::string> construct_labels;
    // Display-only properties ("name" -> "Vehicle"). Never used for mining.
    std::map<std::string, std::string> properties;

    bool operator==(const Node&) const = default;
};

struct Edge {
    NodeId endpoint_a = 0;
    NodeId endpoint_b = 0;
    std::string label;

    // Canonical key: undirected, so endpoints are order-normalized.
    std::tuple<NodeId, NodeId, std::string> key() const {
        return {std::min(endpoint_a, endpoint_b),
                std::max(endpoint_a, endpoint_b), label};
    }
    bool operator==(const Edge& o) const { return key() == o.key(); }
};

struct ModelGraph {
    std::string model_id;
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }

    const Node& node(NodeId id) const { return nodes.at(id); }

    // Appends a node with the next dense id.
    NodeId add_node(std::set<std::string> labels,
                    std::map<std::string, std::string> props = {}) {
        Node n;
        n.id = static_cast<NodeId>(nodes.size());
        n.construct_labels = std::move(labels);
        n.properties = std::move(props);
        nodes.push_back(std::move(n));
        return nodes.back().id;
    }

    // Collapses duplicate (endpoints, label) triples; returns false when
    // the edge was already present.
    bool add_edge(NodeId a, NodeId b, std::string label) {
        if (a == b) throw std::invalid_argument("self-loop edge rejected");
        Edge e{a, b, std::move(label)};
        for (const Edge& existing : edges)
            if (existing == e) return false;
        edges.push_back(std::move(e));
        return true;
    }

    bool has_edge(NodeId a, NodeId b, const std::string& label) const {
        Edge probe{a, b, label};
        for (const Edge& e : edges)
            if (e == probe) return true;
        return false;
    }

    void validate() const {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].id != i)
                throw std::invalid_argument("node ids not dense in " + model_id);
            if (nodes[i].construct_labels.empty())
                throw std::invalid_argument("node without construct labels in " +
                                            model_id);
        }
        for (const Edge& e : edges) {
            if (e.endpoint_a >= nodes.size() || e.endpoint_b >= nodes.size())
                throw std::invalid_argument("dangling edge endpoint in " + model_id);
        }
    }
};

// Structural equality: node sequences and edge multisets (order-insensitive
// for edges) must coincide.
inline bool structurally_equal(const ModelGraph& a, const ModelGraph& b) {
    if (a.model_id != b.model_id || a.nodes != b.nodes) return false;
    auto keyed = [](const ModelGraph& g) {
        std::vector<std::tuple<NodeId, NodeId, std::string>> ks;
        ks.reserve(g.edges.size());
        for (const Edge& e : g.edges) ks.push_back(e.key());
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    return keyed(a) == keyed(b);
}

struct GraphDataset {
    std::vector<ModelGraph> graphs;

    // Union of all construct labels, ordered.
    std::set<std::string> label_vocabulary() const {
        std::set<std::string> vocab;
        for (const ModelGraph& g : graphs)
            for (const Node& n : g.nodes)
                vocab.insert(n.construct_labels.begin(), n.construct_labels.end());
        return vocab;
    }

    void validate() const {
        std::set<std::string> ids;
        for (const ModelGraph& g : graphs) {
            g.validate();
            if (!ids.insert(g.model_id).second)
                throw std::invalid_argument("duplicate model_id " + g.model_id);
        }
    }
};

inline bool structurally_equal(const GraphDataset& a, const GraphDataset& b) {
    if (a.graphs.size() != b.graphs.size()) return false;
    for (std::size_t i = 0; i < a.graphs.size(); ++i)
        if (!structurally_equal(a.graphs[i], b.graphs[i])) return false;
    return true;
}

// The single mining label of a multi-labeled node: sorted "+"-joined
// construct labels. std::set keeps them sorted already.
inline std::string composite_label(const Node& n) {
    std::string out;
    for (const std::string& l : n.construct_labels) {
        if (!out.empty()) out += '+';
        out += l;
    }
    return out;
}

inline std::set<std::string> split_composite_label(const std::string& composite) {
    std::set<std::string> labels;
    std::size_t start = 0;
    while (start <= composite.size()) {
        std::size_t pos = composite.find('+', start);
        if (pos == std::string::npos) {
            labels.insert(composite.substr(start));
            break;
        }
        labels.insert(composite.substr(start, pos - start));
        start = pos + 1;
    }
    labels.erase("");
    return labels;
}

}  // namespace cmining
