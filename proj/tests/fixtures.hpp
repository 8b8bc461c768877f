#pragma once

// Shared fixtures and independent oracles for the test suite: a brute-force
// canonical form and frequent-subgraph enumerator, random graph generators,
// and the two synthetic ten-model corpora with their mining trials.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmining/clustering.hpp"
#include "cmining/filter.hpp"
#include "cmining/graph.hpp"
#include "cmining/importers.hpp"
#include "cmining/miner.hpp"
#include "cmining/model_doc.hpp"

namespace fixtures {

using cmining::GraphDataset;
using cmining::ModelGraph;
using cmining::Node;
using cmining::NodeId;

// ---------------------------------------------------------------------------
// Brute-force canonical form. Independent of the DFS-code machinery: the
// lexicographically smallest (label sequence, edge list) over all node
// orderings whose label sequence is sorted. Small graphs only.

inline std::string canonical_string(const ModelGraph& g) {
    const std::size_t n = g.nodes.size();
    if (n > 9) throw std::invalid_argument("canonical_string: graph too large");
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = cmining::composite_label(g.nodes[i]);

    // Node order candidates: labels must come out sorted, so only permute
    // within equal-label groups.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return labels[a] != labels[b] ? labels[a] < labels[b] : a < b;
    });

    std::string label_part;
    for (std::size_t i : order) label_part += labels[i] + ";";

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && labels[order[j]] == labels[order[i]]) ++j;
        groups.push_back({i, j});
        i = j;
    }

    std::string best;
    std::vector<std::size_t> position(n);
    auto evaluate = [&]() {
        for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
        std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
        edges.reserve(g.edges.size());
        for (const cmining::Edge& e : g.edges) {
            std::size_t a = position[e.endpoint_a], b = position[e.endpoint_b];
            edges.push_back({std::min(a, b), std::max(a, b), e.label});
        }
        std::sort(edges.begin(), edges.end());
        std::string s;
        for (const auto& [a, b, l] : edges)
            s += std::to_string(a) + "-" + std::to_string(b) + "-" + l + ";";
        if (best.empty() || s < best) best = s;
    };
    auto recurse = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = groups[gi];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            self(self, gi + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    recurse(recurse, 0);
    return label_part + "|" + best;
}

// ---------------------------------------------------------------------------
// Brute-force frequent-subgraph enumerator: connected edge subsets of each
// graph, deduplicated per graph by canonical form, counted transactionally.

struct BruteResult {
    // canonical form -> (node count, model support)
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_canonical;
};

inline ModelGraph subgraph_of_edges(const ModelGraph& g,
                                    const std::vector<std::size_t>& edge_idx) {
    std::set<NodeId> node_set;
    for (std::size_t ei : edge_idx) {
        node_set.insert(g.edges[ei].endpoint_a);
        node_set.insert(g.edges[ei].endpoint_b);
    }
    ModelGraph sub;
    sub.model_id = g.model_id;
    std::map<NodeId, NodeId> remap;
    for (NodeId v : node_set) {
        remap[v] = static_cast<NodeId>(sub.nodes.size());
        sub.add_node(g.nodes[v].construct_labels);
    }
    for (std::size_t ei : edge_idx)
        sub.add_edge(remap[g.edges[ei].endpoint_a],
                     remap[g.edges[ei].endpoint_b], g.edges[ei].label);
    return sub;
}

inline bool edge_subset_connected(const ModelGraph& g,
                                  const std::vector<std::size_t>& edge_idx) {
    std::set<NodeId> nodes;
    for (std::size_t ei : edge_idx) {
        nodes.insert(g.edges[ei].endpoint_a);
        nodes.insert(g.edges[ei].endpoint_b);
    }
    if (nodes.empty()) return false;
    std::set<NodeId> seen{*nodes.begin()};
    std::vector<NodeId> stack{*nodes.begin()};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (std::size_t ei : edge_idx) {
            const cmining::Edge& e = g.edges[ei];
            NodeId other;
            if (e.endpoint_a == v) other = e.endpoint_b;
            else if (e.endpoint_b == v) other = e.endpoint_a;
            else continue;
            if (seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen.size() == nodes.size();
}

inline BruteResult brute_force_frequent(const GraphDataset& dataset,
                                        std::size_t min_support,
                                        std::size_t min_nodes) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const ModelGraph& g : dataset.graphs) {
        if (g.edges.size() > 16)
            throw std::invalid_argument("brute_force_frequent: too many edges");
        std::map<std::string, std::size_t> per_graph;  // canonical -> nodes
        for (std::uint32_t mask = 1; mask < (1u << g.edges.size()); ++mask) {
            std::vector<std::size_t> edge_idx;
            for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
                if (mask & (1u << ei)) edge_idx.push_back(ei);
            if (!edge_subset_connected(g, edge_idx)) continue;
            ModelGraph sub = subgraph_of_edges(g, edge_idx);
            per_graph.emplace(canonical_string(sub), sub.node_count());
        }
        for (const auto& [canon, nodes] : per_graph) {
            auto& entry = counts[canon];
            entry.first = nodes;
            entry.second += 1;
        }
    }
    BruteResult result;
    for (const auto& [canon, entry] : counts)
        if (entry.second >= min_support && entry.first >= min_nodes)
            result.by_canonical[canon] = entry;
    return result;
}

// ---------------------------------------------------------------------------
// Random graphs.

inline ModelGraph random_connected_graph(std::mt19937& rng,
                                         std::size_t max_nodes,
                                         std::size_t node_label_count,
                                         std::size_t edge_label_count,
                                         const std::string& model_id = "r") {
    std::uniform_int_distribution<std::size_t> nodes_dist(2, max_nodes);
    const std::size_t n = nodes_dist(rng);
    ModelGraph g;
    g.model_id = model_id;
    auto node_label = [&](std::size_t i) {
        return std::string(1, static_cast<char>('A' + i));
    };
    auto edge_label = [&](std::size_t i) {
        return std::string(1, static_cast<char>('x' + i));
    };
    std::uniform_int_distribution<std::size_t> nl(0, node_label_count - 1);
    std::uniform_int_distribution<std::size_t> el(0, edge_label_count - 1);
    for (std::size_t i = 0; i < n; ++i) g.add_node({node_label(nl(rng))});
    // Spanning tree first, then a few extra edges.
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(parent(rng)),
                   edge_label(el(rng)));
    }
    std::uniform_int_distribution<std::size_t> extra_dist(0, 2);
    std::size_t extra = extra_dist(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < extra; ++k) {
        NodeId a = static_cast<NodeId>(pick(rng));
        NodeId b = static_cast<NodeId>(pick(rng));
        if (a == b) continue;
        g.add_edge(a, b, edge_label(el(rng)));
    }
    return g;
}

inline GraphDataset random_dataset(std::mt19937& rng, std::size_t max_graphs,
                                   std::size_t max_nodes,
                                   std::size_t node_label_count,
                                   std::size_t edge_label_count) {
    std::uniform_int_distribution<std::size_t> count_dist(2, max_graphs);
    GraphDataset dataset;
    const std::size_t count = count_dist(rng);
    for (std::size_t i = 0; i < count; ++i)
        dataset.graphs.push_back(
            random_connected_graph(rng, max_nodes, node_label_count,
                                   edge_label_count, "m" + std::to_string(i)));
    return dataset;
}

inline ModelGraph permute_graph(const ModelGraph& g,
                                const std::vector<NodeId>& perm) {
    ModelGraph out;
    out.model_id = g.model_id;
    std::vector<NodeId> inverse(perm.size());
    for (NodeId i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    // Node at new position i is the old node perm[i].
    for (NodeId i = 0; i < perm.size(); ++i)
        out.add_node(g.nodes[perm[i]].construct_labels,
                     g.nodes[perm[i]].properties);
    for (const cmining::Edge& e : g.edges)
        out.add_edge(inverse[e.endpoint_a], inverse[e.endpoint_b], e.label);
    return out;
}

// ---------------------------------------------------------------------------
// The three-graph path fixture: every graph contains the path B - J - D.

inline GraphDataset fig3_dataset() {
    GraphDataset dataset;
    {
        ModelGraph g;
        g.model_id = "t1";
        NodeId b = g.add_node({"B"}), j = g.add_node({"J"}), d = g.add_node({"D"});
        NodeId a = g.add_node({"A"});
        g.add_edge(b, j, "e");
        g.add_edge(j, d, "e");
        g.add_edge(a, b, "e");
        dataset.graphs.push_back(std::move(g));
    }
    {
        ModelGraph g;
        g.model_id = "t2";
        NodeId b = g.add_node({"B"}), j = g.add_node({"J"}), d = g.add_node({"D"});
        NodeId c = g.add_node({"C"});
        g.add_edge(b, j, "e");
        g.add_edge(j, d, "e");
        g.add_edge(c, d, "e");
        dataset.graphs.push_back(std::move(g));
    }
    {
        ModelGraph g;
        g.model_id = "t3";
        NodeId b = g.add_node({"B"}), j = g.add_node({"J"}), d = g.add_node({"D"});
        g.add_edge(b, j, "e");
        g.add_edge(j, d, "e");
        dataset.graphs.push_back(std::move(g));
    }
    return dataset;
}

inline ModelGraph bjd_pattern() {
    ModelGraph g;
    g.model_id = "bjd";
    NodeId b = g.add_node({"B"}), j = g.add_node({"J"}), d = g.add_node({"D"});
    g.add_edge(b, j, "e");
    g.add_edge(j, d, "e");
    return g;
}

// ---------------------------------------------------------------------------
// Synthetic corpora. Models are authored as canonical JSON documents and
// imported, so the corpora also exercise the importers end to end. Shape
// adders append one pattern instance with fresh ids.

class DocBuilder {
public:
    explicit DocBuilder(const std::string& language) {
        doc_["language"] = language;
        key_ = language == "archimate" ? "elements" : "classes";
        doc_[key_] = nlohmann::json::array();
        doc_["relations"] = nlohmann::json::array();
        doc_["generalizations"] = nlohmann::json::array();
    }

    std::string add_concept(const std::string& stereotype,
                            const std::string& name = "") {
        std::string id = "c" + std::to_string(++counter_);
        nlohmann::json c{{"id", id}, {"stereotype", stereotype}};
        if (!name.empty()) c["name"] = name;
        doc_[key_].push_back(std::move(c));
        return id;
    }

    std::string add_relation(const std::string& type, const std::string& source,
                             const std::string& target,
                             const std::string& src_card = "",
                             const std::string& tgt_card = "") {
        std::string id = "r" + std::to_string(++counter_);
        nlohmann::json r{{"id", id}, {"type", type}, {"source", source},
                         {"target", target}};
        if (!src_card.empty()) r["sourceCardinality"] = src_card;
        if (!tgt_card.empty()) r["targetCardinality"] = tgt_card;
        doc_["relations"].push_back(std::move(r));
        return id;
    }

    std::string add_generalization(const std::string& general,
                                   const std::string& specific) {
        std::string id = "g" + std::to_string(++counter_);
        doc_["generalizations"].push_back(
            nlohmann::json{{"id", id}, {"general", general}, {"specific", specific}});
        return id;
    }

    const nlohmann::json& json() const { return doc_; }

private:
    nlohmann::json doc_;
    std::string key_;
    int counter_ = 0;
};

// --- OntoUML shapes ---

inline void add_relator(DocBuilder& b) {
    std::string rel = b.add_concept("relator");
    for (int i = 0; i < 2; ++i) {
        std::string role = b.add_concept("role");
        std::string kind = b.add_concept("kind");
        b.add_relation("mediation", rel, role, "1", "1..*");
        b.add_generalization(kind, role);
    }
}

inline void add_role_mixin(DocBuilder& b) {
    std::string rm = b.add_concept("roleMixin");
    std::string kind = b.add_concept("kind");
    for (int i = 0; i < 3; ++i) {
        std::string role = b.add_concept("role");
        b.add_generalization(rm, role);
        b.add_generalization(kind, role);
    }
}

inline void add_characterization(DocBuilder& b) {
    std::string kind = b.add_concept("kind");
    std::string mode = b.add_concept("mode");
    b.add_relation("characterization", mode, kind, "1", "1");
}

inline void add_category(DocBuilder& b) {
    std::string cat = b.add_concept("category");
    for (int i = 0; i < 2; ++i)
        b.add_generalization(cat, b.add_concept("kind"));
}

inline void add_subkind(DocBuilder& b) {
    std::string kind = b.add_concept("kind");
    for (int i = 0; i < 2; ++i)
        b.add_generalization(kind, b.add_concept("subkind"));
}

inline void add_phase(DocBuilder& b) {
    std::string kind = b.add_concept("kind");
    for (int i = 0; i < 2; ++i)
        b.add_generalization(kind, b.add_concept("phase"));
}

// Expected reified pattern graphs, label-only.

inline NodeId add_card(ModelGraph& g, const std::string& value,
                       const char* marker, NodeId relation) {
    NodeId card = g.add_node({value, marker});
    g.add_edge(card, relation, cmining::kEdgeCardinalities);
    return card;
}

inline ModelGraph relator_pattern() {
    ModelGraph g;
    g.model_id = "relator";
    NodeId rel = g.add_node({"relator"});
    for (int i = 0; i < 2; ++i) {
        NodeId role = g.add_node({"role"});
        NodeId kind = g.add_node({"kind"});
        NodeId med = g.add_node({"mediation"});
        g.add_edge(med, rel, cmining::kEdgeSource);
        g.add_edge(med, role, cmining::kEdgeTarget);
        add_card(g, "1", cmining::kCardSrc, med);
        add_card(g, "1..*", cmining::kCardTgt, med);
        NodeId gen = g.add_node({cmining::kGenLabel});
        g.add_edge(gen, kind, cmining::kEdgeGeneral);
        g.add_edge(gen, role, cmining::kEdgeSpecific);
    }
    return g;
}

inline ModelGraph role_mixin_pattern() {
    ModelGraph g;
    g.model_id = "roleMixin";
    NodeId rm = g.add_node({"roleMixin"});
    NodeId kind = g.add_node({"kind"});
    for (int i = 0; i < 3; ++i) {
        NodeId role = g.add_node({"role"});
        NodeId g1 = g.add_node({cmining::kGenLabel});
        g.add_edge(g1, rm, cmining::kEdgeGeneral);
        g.add_edge(g1, role, cmining::kEdgeSpecific);
        NodeId g2 = g.add_node({cmining::kGenLabel});
        g.add_edge(g2, kind, cmining::kEdgeGeneral);
        g.add_edge(g2, role, cmining::kEdgeSpecific);
    }
    return g;
}

inline ModelGraph characterization_pattern() {
    ModelGraph g;
    g.model_id = "characterization";
    NodeId kind = g.add_node({"kind"});
    NodeId mode = g.add_node({"mode"});
    NodeId ch = g.add_node({"characterization"});
    g.add_edge(ch, mode, cmining::kEdgeSource);
    g.add_edge(ch, kind, cmining::kEdgeTarget);
    add_card(g, "1", cmining::kCardSrc, ch);
    add_card(g, "1", cmining::kCardTgt, ch);
    return g;
}

inline ModelGraph parent_children_pattern(const std::string& model_id,
                                          const std::string& parent_label,
                                          const std::string& child_label,
                                          int children) {
    ModelGraph g;
    g.model_id = model_id;
    NodeId parent = g.add_node({parent_label});
    for (int i = 0; i < children; ++i) {
        NodeId child = g.add_node({child_label});
        NodeId gen = g.add_node({cmining::kGenLabel});
        g.add_edge(gen, parent, cmining::kEdgeGeneral);
        g.add_edge(gen, child, cmining::kEdgeSpecific);
    }
    return g;
}

inline ModelGraph category_pattern() {
    return parent_children_pattern("category", "category", "kind", 2);
}
inline ModelGraph subkind_pattern() {
    return parent_children_pattern("subkind", "kind", "subkind", 2);
}
inline ModelGraph phase_pattern() {
    return parent_children_pattern("phase", "kind", "phase", 2);
}

// --- ArchiMate shapes ---

inline void add_cyclic_structure(DocBuilder& b) {
    std::vector<std::string> bp;
    for (int i = 0; i < 4; ++i) bp.push_back(b.add_concept("BusinessProcess"));
    b.add_relation("Triggering", bp[0], bp[1]);
    b.add_relation("Triggering", bp[1], bp[2]);
    b.add_relation("Flow", bp[2], bp[3]);
    b.add_relation("Flow", bp[3], bp[0]);
    b.add_relation("Serving", bp[0], bp[2]);
}

inline void add_chained_exposure(DocBuilder& b) {
    std::string as = b.add_concept("ApplicationService");
    std::string ts1 = b.add_concept("TechnologyService");
    std::string ts2 = b.add_concept("TechnologyService");
    std::string art = b.add_concept("Artifact");
    b.add_relation("Realization", ts1, as);
    b.add_relation("Realization", ts2, as);
    b.add_relation("Access", as, art);
    b.add_relation("Access", ts1, art);
    b.add_relation("Access", ts2, art);
}

inline void add_cyclic_dependency(DocBuilder& b) {
    std::vector<std::string> ts;
    for (int i = 0; i < 4; ++i) ts.push_back(b.add_concept("TechnologyService"));
    for (int i = 0; i < 4; ++i)
        b.add_relation("Triggering", ts[i], ts[(i + 1) % 4]);
}

inline void add_data_spread(DocBuilder& b) {
    std::string data = b.add_concept("DataObject");
    std::string as = b.add_concept("ApplicationService");
    b.add_relation("Access", as, data);
    for (int i = 0; i < 2; ++i)
        b.add_relation("Serving", as, b.add_concept("BusinessService"));
}

inline void add_multi_assignment(DocBuilder& b) {
    std::string actor = b.add_concept("BusinessActor");
    for (int i = 0; i < 2; ++i)
        b.add_relation("Assignment", actor, b.add_concept("BusinessProcess"));
}

inline void add_wrong_cuts(DocBuilder& b) {
    std::string ac = b.add_concept("ApplicationComponent");
    for (int i = 0; i < 2; ++i)
        b.add_relation("Realization", b.add_concept("ApplicationFunction"), ac);
}

inline NodeId add_rel_node(ModelGraph& g, const std::string& type, NodeId src,
                           NodeId tgt) {
    NodeId rel = g.add_node({type});
    g.add_edge(rel, src, cmining::kEdgeSource);
    g.add_edge(rel, tgt, cmining::kEdgeTarget);
    return rel;
}

inline ModelGraph cyclic_structure_pattern() {
    ModelGraph g;
    g.model_id = "cyclic_structure";
    std::vector<NodeId> bp;
    for (int i = 0; i < 4; ++i) bp.push_back(g.add_node({"BusinessProcess"}));
    add_rel_node(g, "Triggering", bp[0], bp[1]);
    add_rel_node(g, "Triggering", bp[1], bp[2]);
    add_rel_node(g, "Flow", bp[2], bp[3]);
    add_rel_node(g, "Flow", bp[3], bp[0]);
    add_rel_node(g, "Serving", bp[0], bp[2]);
    return g;
}

inline ModelGraph chained_exposure_pattern() {
    ModelGraph g;
    g.model_id = "chained_exposure";
    NodeId as = g.add_node({"ApplicationService"});
    NodeId ts1 = g.add_node({"TechnologyService"});
    NodeId ts2 = g.add_node({"TechnologyService"});
    NodeId art = g.add_node({"Artifact"});
    add_rel_node(g, "Realization", ts1, as);
    add_rel_node(g, "Realization", ts2, as);
    add_rel_node(g, "Access", as, art);
    add_rel_node(g, "Access", ts1, art);
    add_rel_node(g, "Access", ts2, art);
    return g;
}

inline ModelGraph cyclic_dependency_pattern() {
    ModelGraph g;
    g.model_id = "cyclic_dependency";
    std::vector<NodeId> ts;
    for (int i = 0; i < 4; ++i) ts.push_back(g.add_node({"TechnologyService"}));
    for (int i = 0; i < 4; ++i)
        add_rel_node(g, "Triggering", ts[i], ts[(i + 1) % 4]);
    return g;
}

// The two non-isomorphic one-edge-deleted chiralities of the dependency
// cycle; excluding them makes the cycle trial report a single pattern.
inline std::vector<ModelGraph> cyclic_dependency_known_paths() {
    std::vector<ModelGraph> out;
    for (const char* drop : {cmining::kEdgeSource, cmining::kEdgeTarget}) {
        ModelGraph g = cyclic_dependency_pattern();
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (g.edges[i].label == drop) {
                g.edges.erase(g.edges.begin() + static_cast<long>(i));
                break;
            }
        }
        g.model_id = std::string("path_") + drop;
        out.push_back(std::move(g));
    }
    return out;
}

inline ModelGraph data_spread_pattern() {
    ModelGraph g;
    g.model_id = "data_spread";
    NodeId data = g.add_node({"DataObject"});
    NodeId as = g.add_node({"ApplicationService"});
    add_rel_node(g, "Access", as, data);
    for (int i = 0; i < 2; ++i)
        add_rel_node(g, "Serving", as, g.add_node({"BusinessService"}));
    return g;
}

inline ModelGraph multi_assignment_pattern() {
    ModelGraph g;
    g.model_id = "multi_assignment";
    NodeId actor = g.add_node({"BusinessActor"});
    for (int i = 0; i < 2; ++i)
        add_rel_node(g, "Assignment", actor, g.add_node({"BusinessProcess"}));
    return g;
}

inline ModelGraph wrong_cuts_pattern() {
    ModelGraph g;
    g.model_id = "wrong_cuts";
    NodeId ac = g.add_node({"ApplicationComponent"});
    for (int i = 0; i < 2; ++i)
        add_rel_node(g, "Realization", g.add_node({"ApplicationFunction"}), ac);
    return g;
}

// --- Corpora ---

inline std::vector<nlohmann::json> ontouml_corpus_docs() {
    using Adder = void (*)(DocBuilder&);
    // Per-model shape lists chosen to hit the documented frequencies:
    // relator 3/3, roleMixin 4/4, characterization 9/8, category 9/7,
    // subkind 3/3, phase 4/3.
    const std::vector<std::vector<Adder>> plans = {
        {add_characterization, add_category, add_subkind, add_phase},
        {add_characterization, add_characterization, add_category, add_phase},
        {add_characterization, add_category, add_phase, add_phase},
        {add_relator, add_characterization},
        {add_relator, add_characterization, add_category},
        {add_role_mixin, add_category, add_category},
        {add_role_mixin, add_characterization, add_subkind},
        {add_relator, add_characterization, add_category},
        {add_role_mixin, add_category, add_category},
        {add_role_mixin, add_characterization, add_subkind},
    };
    std::vector<nlohmann::json> docs;
    for (const auto& plan : plans) {
        DocBuilder b("ontouml");
        for (Adder add : plan) add(b);
        docs.push_back(b.json());
    }
    return docs;
}

inline std::vector<nlohmann::json> archimate_corpus_docs() {
    using Adder = void (*)(DocBuilder&);
    // cyclic structure 3/3, chained exposure 4/4, cyclic dependency 8/6,
    // data spread 3/3, multi assignment 6/5, wrong cuts 9/7.
    const std::vector<std::vector<Adder>> plans = {
        {add_cyclic_structure, add_cyclic_dependency, add_multi_assignment},
        {add_chained_exposure, add_cyclic_dependency, add_wrong_cuts,
         add_wrong_cuts},
        {add_chained_exposure, add_data_spread, add_wrong_cuts},
        {add_cyclic_structure, add_data_spread, add_multi_assignment},
        {add_chained_exposure, add_multi_assignment, add_wrong_cuts,
         add_wrong_cuts},
        {add_cyclic_dependency, add_cyclic_dependency, add_wrong_cuts},
        {add_cyclic_dependency, add_multi_assignment, add_wrong_cuts},
        {add_cyclic_structure, add_cyclic_dependency, add_data_spread},
        {add_chained_exposure, add_multi_assignment, add_multi_assignment,
         add_wrong_cuts},
        {add_cyclic_dependency, add_cyclic_dependency, add_wrong_cuts},
    };
    std::vector<nlohmann::json> docs;
    for (const auto& plan : plans) {
        DocBuilder b("archimate");
        for (Adder add : plan) add(b);
        docs.push_back(b.json());
    }
    return docs;
}

inline GraphDataset import_corpus(const std::vector<nlohmann::json>& docs,
                                  cmining::ModelLanguage language) {
    GraphDataset dataset;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::string id = "model_" + std::string(i + 1 < 10 ? "0" : "") +
                         std::to_string(i + 1);
        cmining::CanonicalModelDoc doc = cmining::parse_model_doc(docs[i], id);
        if (doc.language != language)
            throw std::invalid_argument("corpus language mismatch");
        dataset.graphs.push_back(cmining::import_doc(doc));
    }
    dataset.validate();
    return dataset;
}

inline GraphDataset ontouml_corpus() {
    return import_corpus(ontouml_corpus_docs(), cmining::ModelLanguage::kOntouml);
}

inline GraphDataset archimate_corpus() {
    return import_corpus(archimate_corpus_docs(),
                         cmining::ModelLanguage::kArchimate);
}

// --- Trials ---

struct Trial {
    std::string name;
    cmining::FilterSpec filter;
    std::size_t min_support = 0;
    std::size_t min_nodes = 0;
    std::vector<ModelGraph> known_patterns;
    ModelGraph expected_pattern;
    std::size_t expected_total_frequency = 0;
    std::size_t expected_model_frequency = 0;
    bool expect_single_pattern = false;
};

inline cmining::FilterSpec select_filter(std::set<std::string> labels) {
    cmining::FilterSpec spec;
    spec.select_labels = std::move(labels);
    return spec;
}

inline std::vector<Trial> ontouml_trials() {
    std::vector<Trial> trials;
    trials.push_back({"relator",
                      select_filter({"relator", "mediation", "role", "kind",
                                     cmining::kGenLabel, "1", "1..*",
                                     cmining::kCardSrc, cmining::kCardTgt}),
                      3, 12, {}, relator_pattern(), 3, 3});
    trials.push_back({"roleMixin",
                      select_filter({"roleMixin", "role", "kind",
                                     cmining::kGenLabel}),
                      4, 10, {}, role_mixin_pattern(), 4, 4});
    trials.push_back({"characterization",
                      select_filter({"characterization", "mode", "kind", "1",
                                     cmining::kCardSrc, cmining::kCardTgt}),
                      8, 4, {}, characterization_pattern(), 9, 8});
    trials.push_back({"category",
                      select_filter({"category", "kind", cmining::kGenLabel}),
                      6, 4, {}, category_pattern(), 9, 7});
    trials.push_back({"subkind",
                      select_filter({"subkind", "kind", cmining::kGenLabel}),
                      3, 4, {}, subkind_pattern(), 3, 3});
    trials.push_back({"phase",
                      select_filter({"phase", "kind", cmining::kGenLabel}),
                      3, 4, {}, phase_pattern(), 4, 3});
    return trials;
}

inline std::vector<Trial> archimate_trials() {
    std::vector<Trial> trials;
    trials.push_back({"cyclic_structure",
                      select_filter({"BusinessProcess", "Triggering", "Flow",
                                     "Serving"}),
                      3, 9, {}, cyclic_structure_pattern(), 3, 3});
    trials.push_back({"chained_exposure",
                      select_filter({"ApplicationService", "TechnologyService",
                                     "Artifact", "Realization", "Access"}),
                      4, 9, {}, chained_exposure_pattern(), 4, 4});
    trials.push_back({"cyclic_dependency",
                      select_filter({"TechnologyService", "Triggering"}),
                      6, 8, cyclic_dependency_known_paths(),
                      cyclic_dependency_pattern(), 8, 6, true});
    trials.push_back({"data_spread",
                      select_filter({"DataObject", "ApplicationService",
                                     "BusinessService", "Access", "Serving"}),
                      3, 7, {}, data_spread_pattern(), 3, 3});
    trials.push_back({"multi_assignment",
                      select_filter({"BusinessActor", "BusinessProcess",
                                     "Assignment"}),
                      5, 5, {}, multi_assignment_pattern(), 6, 5});
    trials.push_back({"wrong_cuts",
                      select_filter({"ApplicationComponent",
                                     "ApplicationFunction", "Realization"}),
                      7, 5, {}, wrong_cuts_pattern(), 9, 7});
    return trials;
}

// ---------------------------------------------------------------------------
// Clustering fixture: six star families with private label pairs, five size
// variants each. Vectors within a family are nearly parallel; across
// families they share only the node/edge-count coordinates.

struct LabeledPatterns {
    std::vector<cmining::Pattern> patterns;
    std::vector<cmining::Cluster> truth;
};

inline LabeledPatterns clustering_families() {
    const std::vector<std::pair<std::string, std::string>> families = {
        {"relator", "mediation"},       {"roleMixin", "role"},
        {"category", "kind"},           {"mode", "characterization"},
        {"subkind", "gen"},             {"phase", "association"}};
    LabeledPatterns out;
    int index = 0;
    for (std::size_t f = 0; f < families.size(); ++f) {
        cmining::Cluster truth_cluster;
        truth_cluster.cluster_id = static_cast<int>(f);
        for (int leaves = 4; leaves <= 8; ++leaves) {
            ModelGraph g;
            g.model_id = families[f].first + "_" + std::to_string(leaves);
            NodeId center = g.add_node({families[f].first});
            for (int l = 0; l < leaves; ++l) {
                NodeId leaf = g.add_node({families[f].second});
                g.add_edge(center, leaf, "r");
            }
            cmining::Pattern p;
            p.graph = std::move(g);
            p.pattern_index = index;
            out.patterns.push_back(std::move(p));
            truth_cluster.member_pattern_indices.push_back(index);
            ++index;
        }
        out.truth.push_back(std::move(truth_cluster));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Performance corpus: generic-language documents with 30-80 relations each
// over a small type vocabulary.

inline std::vector<nlohmann::json> performance_corpus_docs(std::mt19937& rng,
                                                           std::size_t models) {
    const std::vector<std::string> element_types = {"Server", "Service",
                                                    "Process", "Store"};
    const std::vector<std::string> relation_types = {"calls", "reads", "owns"};
    std::uniform_int_distribution<std::size_t> relation_count(30, 80);
    std::uniform_int_distribution<std::size_t> element_count(20, 40);
    std::uniform_int_distribution<std::size_t> et(0, element_types.size() - 1);
    std::uniform_int_distribution<std::size_t> rt(0, relation_types.size() - 1);

    std::vector<nlohmann::json> docs;
    for (std::size_t m = 0; m < models; ++m) {
        DocBuilder b("generic");
        const std::size_t elements = element_count(rng);
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < elements; ++i)
            ids.push_back(b.add_concept(element_types[et(rng)]));
        std::uniform_int_distribution<std::size_t> pick(0, elements - 1);
        const std::size_t relations = relation_count(rng);
        for (std::size_t r = 0; r < relations;) {
            std::size_t a = pick(rng), c = pick(rng);
            if (a == c) continue;
            b.add_relation(relation_types[rt(rng)], ids[a], ids[c]);
            ++r;
        }
        docs.push_back(b.json());
    }
    return docs;
}

}  // namespace fixtures
