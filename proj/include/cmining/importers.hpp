#pragma once

// Reification of model documents into ModelGraphs. Every construct becomes
// a node; attachment and direction are encoded by role-labeled edges
// (source/target for relations, general/specific for generalizations,
// cardinalities for multiplicity nodes).

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cmining/graph.hpp"
#include "cmining/model_doc.hpp"

namespace cmining {

// Cardinality end markers; they make source-end and target-end
// multiplicities distinguishable after reification.
inline constexpr const char* kCardSrc = "card-src";
inline constexpr const char* kCardTgt = "card-tgt";
inline constexpr const char* kGenLabel = "gen";
inline constexpr const char* kGensetLabel = "genset";

struct ImportReport {
    std::string doc_id;
    std::map<std::string, std::size_t> mapped;   // construct kind -> count
    std::vector<std::string> skipped;            // human-readable reasons

    std::size_t mapped_total() const {
        std::size_t n = 0;
        for (const auto& [k, v] : mapped) n += v;
        return n;
    }
};

class ImportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Known OntoUML stereotypes in their canonical casing.
inline std::string normalize_ontouml_stereotype(const std::string& raw,
                                                ImportReport& report) {
    static const std::map<std::string, std::string> kCanonical = {
        {"kind", "kind"},         {"subkind", "subkind"},
        {"role", "role"},         {"phase", "phase"},
        {"relator", "relator"},   {"mode", "mode"},
        {"category", "category"}, {"rolemixin", "roleMixin"},
        {"mixin", "mixin"},       {"collective", "collective"},
        {"quantity", "quantity"}, {"quality", "quality"},
        {"event", "event"},       {"mediation", "mediation"},
        {"characterization", "characterization"},
        {"material", "material"}, {"formal", "formal"},
        {"componentof", "componentOf"}, {"memberof", "memberOf"},
        {"association", "association"}};
    std::string key;
    for (char c : trim(raw)) key += static_cast<char>(std::tolower(c));
    auto it = kCanonical.find(key);
    if (it != kCanonical.end()) return it->second;
    std::string literal = trim(raw);
    report.skipped.push_back("unknown stereotype kept as literal label: " + literal);
    return literal;
}

struct RefTable {
    std::map<std::string, NodeId> node_of_id;

    NodeId resolve(const std::string& ref, const std::string& doc_id,
                   const std::string& context) const {
        auto it = node_of_id.find(ref);
        if (it == node_of_id.end())
            throw ImportError(doc_id + ": unresolvable ref \"" + ref + "\" in " +
                              context);
        return it->second;
    }
};

inline void attach_cardinality(ModelGraph& g, NodeId relation_node,
                               const std::string& value, const char* end_marker) {
    NodeId card = g.add_node({trim(value), end_marker});
    g.add_edge(card, relation_node, kEdgeCardinalities);
}

}  // namespace detail

// Algorithm-1 style reification: every concept becomes a node; a relation
// concept is additionally wired to its endpoints with source/target edges.
inline ModelGraph import_generic(const CanonicalModelDoc& doc,
                                 ImportReport* report_out = nullptr) {
    if (doc.language != ModelLanguage::kGeneric)
        throw ImportError(doc.doc_id + ": import_generic expects language=generic");
    ImportReport report;
    report.doc_id = doc.doc_id;
    ModelGraph g;
    g.model_id = doc.doc_id;
    detail::RefTable refs;

    for (const DocConcept& c : doc.concepts) {
        std::string label = detail::trim(c.stereotype);
        if (label.empty()) label = "concept";
        std::map<std::string, std::string> props;
        if (!c.name.empty()) props["name"] = c.name;
        refs.node_of_id[c.id] = g.add_node({label}, std::move(props));
        ++report.mapped["concept"];
    }
    for (const DocRelation& r : doc.relations) {
        NodeId src = refs.resolve(r.source, doc.doc_id, "relation " + r.id);
        NodeId tgt = refs.resolve(r.target, doc.doc_id, "relation " + r.id);
        std::string label = detail::trim(r.type);
        if (label.empty()) label = "relation";
        std::map<std::string, std::string> props;
        if (!r.name.empty()) props["name"] = r.name;
        NodeId rel = g.add_node({label}, std::move(props));
        refs.node_of_id[r.id] = rel;
        g.add_edge(rel, src, kEdgeSource);
        g.add_edge(rel, tgt, kEdgeTarget);
        ++report.mapped["relation"];
    }
    for (const DocGeneralization& gen : doc.generalizations)
        report.skipped.push_back("generalization " + gen.id +
                                 " not supported by generic importer");
    for (const DocGeneralizationSet& set : doc.generalization_sets)
        report.skipped.push_back("generalization set " + set.id +
                                 " not supported by generic importer");
    g.validate();
    if (report_out) *report_out = std::move(report);
    return g;
}

inline ModelGraph import_ontouml(const CanonicalModelDoc& doc,
                                 ImportReport* report_out = nullptr) {
    if (doc.language != ModelLanguage::kOntouml)
        throw ImportError(doc.doc_id + ": import_ontouml expects language=ontouml");
    ImportReport report;
    report.doc_id = doc.doc_id;
    ModelGraph g;
    g.model_id = doc.doc_id;
    detail::RefTable refs;

    for (const DocConcept& c : doc.concepts) {
        std::string label =
            detail::normalize_ontouml_stereotype(c.stereotype, report);
        if (label.empty()) label = "class";
        std::map<std::string, std::string> props;
        if (!c.name.empty()) props["name"] = c.name;
        refs.node_of_id[c.id] = g.add_node({label}, std::move(props));
        ++report.mapped["class"];
    }
    for (const DocRelation& r : doc.relations) {
        NodeId src, tgt;
        try {
            src = refs.resolve(r.source, doc.doc_id, "association " + r.id);
            tgt = refs.resolve(r.target, doc.doc_id, "association " + r.id);
        } catch (const ImportError& e) {
            // Missing endpoint: drop the relation, keep the classes.
            report.skipped.push_back(e.what());
            continue;
        }
        std::string label = r.type.empty()
                                ? "association"
                                : detail::normalize_ontouml_stereotype(r.type, report);
        std::map<std::string, std::string> props;
        if (!r.name.empty()) props["name"] = r.name;
        NodeId rel = g.add_node({label}, std::move(props));
        refs.node_of_id[r.id] = rel;
        g.add_edge(rel, src, kEdgeSource);
        g.add_edge(rel, tgt, kEdgeTarget);
        ++report.mapped["association"];
        if (r.source_cardinality) {
            detail::attach_cardinality(g, rel, *r.source_cardinality, kCardSrc);
            ++report.mapped["cardinality"];
        }
        if (r.target_cardinality) {
            detail::attach_cardinality(g, rel, *r.target_cardinality, kCardTgt);
            ++report.mapped["cardinality"];
        }
    }
    for (const DocGeneralization& gen : doc.generalizations) {
        NodeId general = refs.resolve(gen.general, doc.doc_id,
                                      "generalization " + gen.id);
        NodeId specific = refs.resolve(gen.specific, doc.doc_id,
                                       "generalization " + gen.id);
        NodeId gnode = g.add_node({kGenLabel});
        refs.node_of_id[gen.id] = gnode;
        g.add_edge(gnode, general, kEdgeGeneral);
        g.add_edge(gnode, specific, kEdgeSpecific);
        ++report.mapped["generalization"];
    }
    for (const DocGeneralizationSet& set : doc.generalization_sets) {
        std::set<std::string> labels{kGensetLabel};
        if (set.is_disjoint) labels.insert("disjoint");
        if (set.is_complete) labels.insert("complete");
        NodeId snode = g.add_node(std::move(labels));
        for (const std::string& member : set.generalizations) {
            NodeId gnode =
                refs.resolve(member, doc.doc_id, "generalization set " + set.id);
            // Plain edge to each member generalization node.
            g.add_edge(snode, gnode, kEdgeGeneral);
        }
        ++report.mapped["generalizationSet"];
    }
    g.validate();
    if (report_out) *report_out = std::move(report);
    return g;
}

inline ModelGraph import_archimate(const CanonicalModelDoc& doc,
                                   ImportReport* report_out = nullptr) {
    if (doc.language != ModelLanguage::kArchimate)
        throw ImportError(doc.doc_id +
                          ": import_archimate expects language=archimate");
    ImportReport report;
    report.doc_id = doc.doc_id;
    ModelGraph g;
    g.model_id = doc.doc_id;
    detail::RefTable refs;

    for (const DocConcept& c : doc.concepts) {
        std::string label = detail::trim(c.stereotype);
        if (label.empty()) label = "Element";
        std::map<std::string, std::string> props;
        if (!c.name.empty()) props["name"] = c.name;
        refs.node_of_id[c.id] = g.add_node({label}, std::move(props));
        ++report.mapped["element"];
    }
    for (const DocRelation& r : doc.relations) {
        NodeId src, tgt;
        try {
            src = refs.resolve(r.source, doc.doc_id, "relationship " + r.id);
            tgt = refs.resolve(r.target, doc.doc_id, "relationship " + r.id);
        } catch (const ImportError& e) {
            report.skipped.push_back(e.what());
            continue;
        }
        std::string label = detail::trim(r.type);
        if (label.empty()) label = "Association";
        std::map<std::string, std::string> props;
        if (!r.name.empty()) props["name"] = r.name;
        NodeId rel = g.add_node({label}, std::move(props));
        refs.node_of_id[r.id] = rel;
        if (label == "Specialization") {
            // Source specializes target: general toward the target element.
            g.add_edge(rel, tgt, kEdgeGeneral);
            g.add_edge(rel, src, kEdgeSpecific);
        } else {
            g.add_edge(rel, src, kEdgeSource);
            g.add_edge(rel, tgt, kEdgeTarget);
        }
        ++report.mapped["relationship"];
    }
    for (const DocGeneralization& gen : doc.generalizations) {
        // Explicit generalization entries behave like Specialization
        // relationships.
        NodeId general = refs.resolve(gen.general, doc.doc_id,
                                      "generalization " + gen.id);
        NodeId specific = refs.resolve(gen.specific, doc.doc_id,
                                       "generalization " + gen.id);
        NodeId gnode = g.add_node({"Specialization"});
        refs.node_of_id[gen.id] = gnode;
        g.add_edge(gnode, general, kEdgeGeneral);
        g.add_edge(gnode, specific, kEdgeSpecific);
        ++report.mapped["relationship"];
    }
    g.validate();
    if (report_out) *report_out = std::move(report);
    return g;
}

inline ModelGraph import_doc(const CanonicalModelDoc& doc,
                             ImportReport* report = nullptr) {
    switch (doc.language) {
        case ModelLanguage::kGeneric: return import_generic(doc, report);
        case ModelLanguage::kOntouml: return import_ontouml(doc, report);
        case ModelLanguage::kArchimate: return import_archimate(doc, report);
    }
    throw ImportError("unreachable");
}

// Imports every *.json document of `dir` in lexicographic filename order.
// Unparseable documents are skipped with a report entry; zero successes is
// an error.
inline std::pair<GraphDataset, std::vector<ImportReport>> load_directory(
    const std::filesystem::path& dir, ModelLanguage language) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(dir))
        throw ImportError("not a directory: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    GraphDataset dataset;
    std::vector<ImportReport> reports;
    for (const auto& file : files) {
        ImportReport report;
        try {
            CanonicalModelDoc doc = load_model_doc(file);
            if (doc.language != language)
                throw ImportError(file.string() + ": language mismatch, expected " +
                                  to_string(language));
            dataset.graphs.push_back(import_doc(doc, &report));
            for (const std::string& key : doc.ignored_keys)
                report.skipped.push_back("ignored unknown key: " + key);
        } catch (const std::exception& e) {
            report.doc_id = file.stem().string();
            report.skipped.push_back(std::string("document skipped: ") + e.what());
        }
        reports.push_back(std::move(report));
    }
    if (dataset.graphs.empty())
        throw ImportError("no importable documents in " + dir.string());
    dataset.validate();
    return {std::move(dataset), std::move(reports)};
}

}  // namespace cmining
