#pragma once

// Minimum-DFS-code canonical forms for undirected labeled graphs.
// A DFS code is the edge sequence induced by a depth-first traversal;
// the lexicographic minimum over all traversals is a canonical form:
// two graphs have equal minimum codes iff they are isomorphic.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmining/graph.hpp"

namespace cmining {

struct DfsEdge {
    int from = 0;
    int to = 0;
    std::string from_label;
    std::string edge_label;
    std::string to_label;

    bool is_forward() const { return to > from; }
    bool is_backward() const { return to < from; }

    bool operator==(const DfsEdge&) const = default;
};

// gSpan neighborhood-restricted edge order. Backward edges sort by the
// destination index, forward edges by descending origin depth; label
// tuples break the remaining ties.
inline bool dfs_edge_less(const DfsEdge& a, const DfsEdge& b) {
    const bool fa = a.is_forward(), fb = b.is_forward();
    if (!fa && fb) return a.from < b.to;
    if (fa && !fb) return a.to <= b.from;
    if (!fa && !fb) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return std::tie(a.from_label, a.edge_label, a.to_label) <
               std::tie(b.from_label, b.edge_label, b.to_label);
    }
    // both forward
    if (a.to != b.to) return a.to < b.to;
    if (a.from != b.from) return a.from > b.from;
    return std::tie(a.from_label, a.edge_label, a.to_label) <
           std::tie(b.from_label, b.edge_label, b.to_label);
}

struct DfsCode {
    std::vector<DfsEdge> edges;

    bool operator==(const DfsCode&) const = default;

    int vertex_count() const {
        int m = 0;
        for (const DfsEdge& e : edges) m = std::max({m, e.from + 1, e.to + 1});
        return m;
    }

    // Indices of the rightmost path, root first. The parent of a DFS
    // vertex is the origin of the forward edge that introduced it.
    std::vector<int> rightmost_path() const {
        std::vector<int> parent(vertex_count(), -1);
        for (const DfsEdge& e : edges)
            if (e.is_forward()) parent[e.to] = e.from;
        std::vector<int> path;
        for (int v = vertex_count() - 1; v != -1; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Materializes the graph this code denotes; node labels are the
    // composite labels split back into construct-label sets.
    ModelGraph to_graph(std::string model_id = "pattern") const {
        ModelGraph g;
        g.model_id = std::move(model_id);
        std::vector<std::string> labels(vertex_count());
        for (const DfsEdge& e : edges) {
            labels[e.from] = e.from_label;
            labels[e.to] = e.to_label;
        }
        for (const std::string& l : labels) g.add_node(split_composite_label(l));
        for (const DfsEdge& e : edges)
            g.add_edge(static_cast<NodeId>(e.from), static_cast<NodeId>(e.to),
                       e.edge_label);
        return g;
    }
};

// Lexicographic order with the gSpan edge order; a strict prefix is smaller.
inline bool dfs_code_less(const DfsCode& a, const DfsCode& b) {
    std::size_t n = std::min(a.edges.size(), b.edges.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (dfs_edge_less(a.edges[i], b.edges[i])) return true;
        if (dfs_edge_less(b.edges[i], a.edges[i])) return false;
    }
    return a.edges.size() < b.edges.size();
}

namespace detail {

// Composite-labeled view of a ModelGraph used by code construction.
struct LabeledView {
    std::vector<std::string> node_labels;
    struct Adj {
        NodeId other;
        std::size_t edge_index;
    };
    std::vector<std::vector<Adj>> adjacency;
    std::vector<Edge> edges;

    explicit LabeledView(const ModelGraph& g) {
        node_labels.reserve(g.nodes.size());
        for (const Node& n : g.nodes) node_labels.push_back(composite_label(n));
        adjacency.resize(g.nodes.size());
        edges = g.edges;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            adjacency[g.edges[i].endpoint_a].push_back({g.edges[i].endpoint_b, i});
            adjacency[g.edges[i].endpoint_b].push_back({g.edges[i].endpoint_a, i});
        }
    }
};

// One partial DFS embedding during canonical construction: dfs index ->
// graph node, plus the set of consumed graph edges.
struct CanonEmbedding {
    std::vector<NodeId> map;           // dfs id -> node id
    std::vector<int> inverse;          // node id -> dfs id or -1
    std::vector<bool> used_edge;

    bool maps(NodeId v) const { return inverse[v] != -1; }
};

}  // namespace detail

// Label of an already-assigned DFS vertex, read off the code prefix.
inline std::string code_label_of(const DfsCode& code, int dfs_id) {
    for (const DfsEdge& e : code.edges) {
        if (e.from == dfs_id) return e.from_label;
        if (e.to == dfs_id) return e.to_label;
    }
    throw std::logic_error("dfs vertex not assigned yet");
}

// Builds the minimum DFS code greedily: at every step the smallest
// admissible extension over all surviving embeddings is appended, and only
// embeddings realizing it are kept. When `reference` is given, construction
// aborts early as soon as the built prefix deviates from it; the return
// value is then meaningless except for min-check purposes.
//
// Throws on disconnected or edgeless input.
inline DfsCode min_dfs_code(const ModelGraph& graph,
                            const DfsCode* reference = nullptr,
                            bool* reference_is_min = nullptr) {
    if (graph.edges.empty())
        throw std::invalid_argument("min_dfs_code: graph has no edges");
    detail::LabeledView view(graph);

    DfsCode code;
    std::vector<detail::CanonEmbedding> embeddings;

    // Seed: the smallest one-edge code over all edges and orientations.
    DfsEdge best;
    bool have_best = false;
    for (std::size_t ei = 0; ei < view.edges.size(); ++ei) {
        const Edge& e = view.edges[ei];
        for (int dir = 0; dir < 2; ++dir) {
            NodeId a = dir == 0 ? e.endpoint_a : e.endpoint_b;
            NodeId b = dir == 0 ? e.endpoint_b : e.endpoint_a;
            DfsEdge cand{0, 1, view.node_labels[a], e.label, view.node_labels[b]};
            if (!have_best || dfs_edge_less(cand, best)) {
                best = cand;
                have_best = true;
            }
        }
    }
    code.edges.push_back(best);
    for (std::size_t ei = 0; ei < view.edges.size(); ++ei) {
        const Edge& e = view.edges[ei];
        for (int dir = 0; dir < 2; ++dir) {
            NodeId a = dir == 0 ? e.endpoint_a : e.endpoint_b;
            NodeId b = dir == 0 ? e.endpoint_b : e.endpoint_a;
            if (view.node_labels[a] != best.from_label ||
                e.label != best.edge_label ||
                view.node_labels[b] != best.to_label)
                continue;
            detail::CanonEmbedding emb;
            emb.map = {a, b};
            emb.inverse.assign(view.node_labels.size(), -1);
            emb.inverse[a] = 0;
            emb.inverse[b] = 1;
            emb.used_edge.assign(view.edges.size(), false);
            emb.used_edge[ei] = true;
            embeddings.push_back(std::move(emb));
        }
    }
    if (reference) {
        if (code.edges[0] != reference->edges[0]) {
            if (reference_is_min) *reference_is_min = false;
            return code;
        }
    }

    while (code.edges.size() < view.edges.size()) {
        std::vector<int> rmp = code.rightmost_path();
        int rightmost = rmp.back();
        int next_id = code.vertex_count();

        std::optional<DfsEdge> min_ext;
        std::vector<std::pair<std::size_t, std::size_t>> realizers;  // (emb, edge)
        auto consider = [&](const DfsEdge& cand, std::size_t emb_idx,
                            std::size_t edge_idx) {
            if (!min_ext || dfs_edge_less(cand, *min_ext)) {
                min_ext = cand;
                realizers.clear();
            }
            if (cand == *min_ext) realizers.push_back({emb_idx, edge_idx});
        };

        for (std::size_t mi = 0; mi < embeddings.size(); ++mi) {
            const detail::CanonEmbedding& emb = embeddings[mi];
            // Backward extensions: rightmost vertex to a rightmost-path vertex.
            NodeId vr = emb.map[rightmost];
            for (const auto& adj : view.adjacency[vr]) {
                if (emb.used_edge[adj.edge_index]) continue;
                if (!emb.maps(adj.other)) continue;
                int j = emb.inverse[adj.other];
                if (std::find(rmp.begin(), rmp.end(), j) == rmp.end()) continue;
                consider(DfsEdge{rightmost, j, code_label_of(code, rightmost),
                                 view.edges[adj.edge_index].label,
                                 code_label_of(code, j)},
                         mi, adj.edge_index);
            }
            // Forward extensions: any rightmost-path vertex to a fresh vertex.
            for (int i : rmp) {
                NodeId vi = emb.map[i];
                for (const auto& adj : view.adjacency[vi]) {
                    if (emb.used_edge[adj.edge_index]) continue;
                    if (emb.maps(adj.other)) continue;
                    consider(DfsEdge{i, next_id, code_label_of(code, i),
                                     view.edges[adj.edge_index].label,
                                     view.node_labels[adj.other]},
                             mi, adj.edge_index);
                }
            }
        }

        if (!min_ext)
            throw std::invalid_argument("min_dfs_code: graph is disconnected");

        code.edges.push_back(*min_ext);
        if (reference) {
            std::size_t k = code.edges.size() - 1;
            if (k >= reference->edges.size() ||
                code.edges[k] != reference->edges[k]) {
                if (reference_is_min) *reference_is_min = false;
                return code;
            }
        }

        std::vector<detail::CanonEmbedding> next;
        for (const auto& [mi, edge_idx] : realizers) {
            detail::CanonEmbedding emb = embeddings[mi];
            emb.used_edge[edge_idx] = true;
            if (min_ext->is_forward()) {
                const Edge& e = view.edges[edge_idx];
                NodeId from = emb.map[min_ext->from];
                NodeId fresh = e.endpoint_a == from ? e.endpoint_b : e.endpoint_a;
                emb.map.push_back(fresh);
                emb.inverse[fresh] = min_ext->to;
            }
            next.push_back(std::move(emb));
        }
        embeddings = std::move(next);
    }
    if (reference_is_min) *reference_is_min = true;
    return code;
}

// True iff `code` is the minimum DFS code of the graph it denotes.
inline bool is_min(const DfsCode& code) {
    if (code.edges.empty()) return false;
    bool min_flag = false;
    min_dfs_code(code.to_graph(), &code, &min_flag);
    return min_flag;
}

}  // namespace cmining
