#pragma once

// Transactional frequent-subgraph mining with DFS-code canonical forms and
// rightmost-path extension. Nodes enter the search under their composite
// label; emitted pattern graphs carry the construct-label sets back.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmining/dfs_code.hpp"
#include "cmining/graph.hpp"
#include "cmining/matcher.hpp"

namespace cmining {

struct Pattern {
    ModelGraph graph;                    // construct labels only, no properties
    DfsCode code;                        // minimum DFS code
    std::size_t model_support = 0;
    std::vector<std::size_t> supporting_models;  // sorted dataset indices
    int pattern_index = -1;
};

struct MiningConfig {
    std::size_t min_support = 1;   // models
    std::size_t min_nodes = 1;
    std::optional<std::size_t> max_edges;
    std::vector<ModelGraph> known_patterns;
    std::optional<double> timeout_seconds;
};

struct MiningResult {
    std::vector<Pattern> patterns;
    bool truncated = false;  // timeout hit, results partial
};

// Model-level support of an arbitrary connected candidate graph: number of
// models containing at least one exact-composite-label embedding.
inline std::pair<std::size_t, std::vector<std::size_t>> support(
    const ModelGraph& candidate, const GraphDataset& dataset) {
    std::vector<std::size_t> models;
    for (std::size_t i = 0; i < dataset.graphs.size(); ++i) {
        OccurrenceList occs =
            find_occurrences(candidate, dataset.graphs[i], LabelSemantics::kExact);
        if (!occs.occurrences.empty()) models.push_back(i);
    }
    return {models.size(), models};
}

namespace detail {

// One embedding of the current DFS code into a dataset graph.
struct MineEmbedding {
    std::uint32_t graph_index;
    std::vector<NodeId> map;     // dfs id -> node id
    std::vector<bool> on_image;  // node id -> mapped?
    std::vector<bool> used_edge;
};

struct MineContext {
    const GraphDataset* dataset;
    std::vector<LabeledView> views;
    MiningConfig config;
    std::vector<std::pair<DfsCode, std::vector<std::size_t>>> found;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline = false;
    bool truncated = false;

    bool out_of_time() {
        if (!use_deadline) return false;
        if (std::chrono::steady_clock::now() >= deadline) {
            truncated = true;
            return true;
        }
        return false;
    }
};

inline std::vector<std::size_t> supporting_graphs(
    const std::vector<MineEmbedding>& embeddings) {
    std::set<std::size_t> graphs;
    for (const MineEmbedding& e : embeddings) graphs.insert(e.graph_index);
    return {graphs.begin(), graphs.end()};
}

inline void mine_recurse(MineContext& ctx, DfsCode& code,
                         std::vector<MineEmbedding>& embeddings) {
    if (ctx.out_of_time()) return;

    std::vector<std::size_t> supp = supporting_graphs(embeddings);
    ctx.found.push_back({code, supp});

    if (ctx.config.max_edges && code.edges.size() >= *ctx.config.max_edges)
        return;

    std::vector<int> rmp = code.rightmost_path();
    int rightmost = rmp.back();
    int next_id = code.vertex_count();

    // Gather candidate extensions with the embeddings realizing them.
    std::vector<DfsEdge> cand_edges;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cand_realizers;
    auto consider = [&](const DfsEdge& cand, std::size_t emb_idx,
                        std::size_t edge_idx) {
        for (std::size_t i = 0; i < cand_edges.size(); ++i) {
            if (cand_edges[i] == cand) {
                cand_realizers[i].push_back({emb_idx, edge_idx});
                return;
            }
        }
        cand_edges.push_back(cand);
        cand_realizers.push_back({{emb_idx, edge_idx}});
    };

    for (std::size_t mi = 0; mi < embeddings.size(); ++mi) {
        const MineEmbedding& emb = embeddings[mi];
        const LabeledView& view = ctx.views[emb.graph_index];
        NodeId vr = emb.map[rightmost];
        for (const auto& adj : view.adjacency[vr]) {
            if (emb.used_edge[adj.edge_index]) continue;
            if (emb.on_image[adj.other]) {
                // Backward, only onto the rightmost path.
                int j = -1;
                for (int p : rmp)
                    if (emb.map[p] == adj.other) { j = p; break; }
                if (j == -1) continue;
                consider(DfsEdge{rightmost, j, code_label_of(code, rightmost),
                                 view.edges[adj.edge_index].label,
                                 code_label_of(code, j)},
                         mi, adj.edge_index);
            }
        }
        for (int i : rmp) {
            NodeId vi = emb.map[i];
            for (const auto& adj : ctx.views[emb.graph_index].adjacency[vi]) {
                if (emb.used_edge[adj.edge_index]) continue;
                if (emb.on_image[adj.other]) continue;
                consider(DfsEdge{i, next_id, code_label_of(code, i),
                                 view.edges[adj.edge_index].label,
                                 view.node_labels[adj.other]},
                         mi, adj.edge_index);
            }
        }
    }

    // Explore candidates in ascending edge order for deterministic output.
    std::vector<std::size_t> order(cand_edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dfs_edge_less(cand_edges[a], cand_edges[b]);
    });

    for (std::size_t ci : order) {
        if (ctx.out_of_time()) return;
        const DfsEdge& ext = cand_edges[ci];
        // Model-level support of the child.
        std::set<std::size_t> child_graphs;
        for (const auto& [mi, ei] : cand_realizers[ci])
            child_graphs.insert(embeddings[mi].graph_index);
        if (child_graphs.size() < ctx.config.min_support) continue;

        code.edges.push_back(ext);
        if (is_min(code)) {
            std::vector<MineEmbedding> child_embeddings;
            child_embeddings.reserve(cand_realizers[ci].size());
            for (const auto& [mi, ei] : cand_realizers[ci]) {
                MineEmbedding child = embeddings[mi];
                child.used_edge[ei] = true;
                if (ext.is_forward()) {
                    const Edge& e = ctx.views[child.graph_index].edges[ei];
                    NodeId from = child.map[ext.from];
                    NodeId fresh =
                        e.endpoint_a == from ? e.endpoint_b : e.endpoint_a;
                    child.map.push_back(fresh);
                    child.on_image[fresh] = true;
                }
                child_embeddings.push_back(std::move(child));
            }
            mine_recurse(ctx, code, child_embeddings);
        }
        code.edges.pop_back();
    }
}

}  // namespace detail

// Enumerates every connected subgraph (one per minimum DFS code) whose
// model support meets min_support, then applies the min_nodes post-filter
// and known-pattern exclusion. Output order: support descending, code
// ascending.
inline MiningResult mine(const GraphDataset& dataset, const MiningConfig& config) {
    if (dataset.graphs.empty())
        throw std::invalid_argument("mine: empty dataset");
    if (config.min_support > dataset.graphs.size())
        return {};

    detail::MineContext ctx;
    ctx.dataset = &dataset;
    ctx.config = config;
    ctx.views.reserve(dataset.graphs.size());
    for (const ModelGraph& g : dataset.graphs) ctx.views.emplace_back(g);
    if (config.timeout_seconds) {
        ctx.use_deadline = true;
        ctx.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*config.timeout_seconds));
    }

    // Known patterns, canonicalized for exclusion. Disconnected known
    // graphs are a config error.
    std::set<DfsCode, bool (*)(const DfsCode&, const DfsCode&)> known(dfs_code_less);
    for (const ModelGraph& k : config.known_patterns) known.insert(min_dfs_code(k));

    // Frequent one-edge seeds.
    struct Seed {
        DfsEdge edge;
        std::vector<detail::MineEmbedding> embeddings;
    };
    std::vector<Seed> seeds;
    for (std::uint32_t gi = 0; gi < ctx.views.size(); ++gi) {
        const detail::LabeledView& view = ctx.views[gi];
        for (std::size_t ei = 0; ei < view.edges.size(); ++ei) {
            const Edge& e = view.edges[ei];
            for (int dir = 0; dir < 2; ++dir) {
                NodeId a = dir == 0 ? e.endpoint_a : e.endpoint_b;
                NodeId b = dir == 0 ? e.endpoint_b : e.endpoint_a;
                DfsEdge seed_edge{0, 1, view.node_labels[a], e.label,
                                  view.node_labels[b]};
                // Only canonical orientations seed the search.
                if (view.node_labels[b] < view.node_labels[a]) continue;
                detail::MineEmbedding emb;
                emb.graph_index = gi;
                emb.map = {a, b};
                emb.on_image.assign(view.node_labels.size(), false);
                emb.on_image[a] = emb.on_image[b] = true;
                emb.used_edge.assign(view.edges.size(), false);
                emb.used_edge[ei] = true;
                bool found = false;
                for (Seed& s : seeds) {
                    if (s.edge == seed_edge) {
                        s.embeddings.push_back(std::move(emb));
                        found = true;
                        break;
                    }
                }
                if (!found) seeds.push_back({seed_edge, {std::move(emb)}});
            }
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
        return dfs_edge_less(a.edge, b.edge);
    });

    for (Seed& seed : seeds) {
        if (ctx.out_of_time()) break;
        std::vector<std::size_t> supp = detail::supporting_graphs(seed.embeddings);
        if (supp.size() < config.min_support) continue;
        DfsCode code;
        code.edges.push_back(seed.edge);
        detail::mine_recurse(ctx, code, seed.embeddings);
    }

    MiningResult result;
    result.truncated = ctx.truncated;
    for (auto& [code, supp] : ctx.found) {
        if (static_cast<std::size_t>(code.vertex_count()) < config.min_nodes)
            continue;
        if (known.count(code)) continue;
        Pattern p;
        p.code = code;
        p.graph = code.to_graph();
        p.model_support = supp.size();
        p.supporting_models = supp;
        result.patterns.push_back(std::move(p));
    }
    std::sort(result.patterns.begin(), result.patterns.end(),
              [](const Pattern& a, const Pattern& b) {
                  if (a.model_support != b.model_support)
                      return a.model_support > b.model_support;
                  return dfs_code_less(a.code, b.code);
              });
    for (std::size_t i = 0; i < result.patterns.size(); ++i) {
        result.patterns[i].pattern_index = static_cast<int>(i);
        result.patterns[i].graph.model_id = "pattern_" + std::to_string(i);
    }
    return result;
}

// Removes every pattern whose minimum DFS code matches a known graph's
// (after composite labeling); relative order is preserved.
inline std::vector<Pattern> exclude_known(std::vector<Pattern> patterns,
                                          const std::vector<ModelGraph>& known) {
    std::vector<DfsCode> known_codes;
    known_codes.reserve(known.size());
    for (const ModelGraph& k : known) known_codes.push_back(min_dfs_code(k));
    std::erase_if(patterns, [&](const Pattern& p) {
        for (const DfsCode& k : known_codes)
            if (p.code == k) return true;
        return false;
    });
    return patterns;
}

}  // namespace cmining
