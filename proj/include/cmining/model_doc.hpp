#pragma once

// Canonical input schema for source models. One JSON document per model:
//
//   {
//     "language": "generic" | "ontouml" | "archimate",
//     "classes":  [ {"id", "name", "stereotype"} ],        // ontouml/generic
//     "elements": [ {"id", "name", "type"} ],              // archimate/generic
//     "relations": [ {"id", "name"?, "type", "source", "target",
//                     "sourceCardinality"?, "targetCardinality"?} ],
//     "generalizations": [ {"id", "general", "specific"} ],
//     "generalizationSets": [ {"id", "generalizations": [..],
//                              "isDisjoint", "isComplete"} ]   // ontouml only
//   }
//
// Unknown top-level keys are ignored but reported.

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cmining {

enum class ModelLanguage { kGeneric, kOntouml, kArchimate };

inline std::string to_string(ModelLanguage lang) {
    switch (lang) {
        case ModelLanguage::kGeneric: return "generic";
        case ModelLanguage::kOntouml: return "ontouml";
        case ModelLanguage::kArchimate: return "archimate";
    }
    return "?";
}

inline ModelLanguage parse_language(const std::string& s) {
    if (s == "generic") return ModelLanguage::kGeneric;
    if (s == "ontouml") return ModelLanguage::kOntouml;
    if (s == "archimate") return ModelLanguage::kArchimate;
    throw std::invalid_argument("unknown language: " + s);
}

struct DocConcept {
    std::string id;
    std::string name;
    std::string stereotype;  // or element type
};

struct DocRelation {
    std::string id;
    std::string name;
    std::string type;  // relation stereotype / relationship type; may be empty
    std::string source;
    std::string target;
    std::optional<std::string> source_cardinality;
    std::optional<std::string> target_cardinality;
};

struct DocGeneralization {
    std::string id;
    std::string general;
    std::string specific;
};

struct DocGeneralizationSet {
    std::string id;
    std::vector<std::string> generalizations;
    bool is_disjoint = false;
    bool is_complete = false;
};

struct CanonicalModelDoc {
    ModelLanguage language = ModelLanguage::kGeneric;
    std::string doc_id;  // source file stem
    std::vector<DocConcept> concepts;
    std::vector<DocRelation> relations;
    std::vector<DocGeneralization> generalizations;
    std::vector<DocGeneralizationSet> generalization_sets;
    std::vector<std::string> ignored_keys;
};

class DocParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline CanonicalModelDoc parse_model_doc(const nlohmann::json& j,
                                         const std::string& doc_id) {
    CanonicalModelDoc doc;
    doc.doc_id = doc_id;
    if (!j.is_object()) throw DocParseError(doc_id + ": document is not an object");
    if (!j.contains("language"))
        throw DocParseError(doc_id + ": missing \"language\"");
    doc.language = parse_language(j.at("language").get<std::string>());

    auto str_or = [](const nlohmann::json& o, const char* key,
                     const std::string& fallback = "") {
        if (!o.contains(key) || o.at(key).is_null()) return fallback;
        return o.at(key).get<std::string>();
    };

    for (const char* key : {"classes", "elements"}) {
        if (!j.contains(key)) continue;
        for (const auto& c : j.at(key)) {
            DocConcept entry;
            entry.id = str_or(c, "id");
            entry.name = str_or(c, "name");
            entry.stereotype = str_or(c, "stereotype", str_or(c, "type"));
            if (entry.id.empty())
                throw DocParseError(doc_id + ": concept without id");
            doc.concepts.push_back(std::move(entry));
        }
    }
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            DocRelation rel;
            rel.id = str_or(r, "id");
            rel.name = str_or(r, "name");
            rel.type = str_or(r, "type", str_or(r, "stereotype"));
            rel.source = str_or(r, "source");
            rel.target = str_or(r, "target");
            if (r.contains("sourceCardinality") && !r.at("sourceCardinality").is_null())
                rel.source_cardinality = r.at("sourceCardinality").get<std::string>();
            if (r.contains("targetCardinality") && !r.at("targetCardinality").is_null())
                rel.target_cardinality = r.at("targetCardinality").get<std::string>();
            if (rel.id.empty())
                throw DocParseError(doc_id + ": relation without id");
            doc.relations.push_back(std::move(rel));
        }
    }
    if (j.contains("generalizations")) {
        for (const auto& g : j.at("generalizations")) {
            DocGeneralization gen;
            gen.id = str_or(g, "id");
            gen.general = str_or(g, "general");
            gen.specific = str_or(g, "specific");
            if (gen.id.empty())
                throw DocParseError(doc_id + ": generalization without id");
            doc.generalizations.push_back(std::move(gen));
        }
    }
    if (j.contains("generalizationSets")) {
        for (const auto& s : j.at("generalizationSets")) {
            DocGeneralizationSet set;
            set.id = str_or(s, "id");
            if (s.contains("generalizations"))
                for (const auto& ref : s.at("generalizations"))
                    set.generalizations.push_back(ref.get<std::string>());
            set.is_disjoint = s.value("isDisjoint", false);
            set.is_complete = s.value("isComplete", false);
            if (set.id.empty())
                throw DocParseError(doc_id + ": generalization set without id");
            doc.generalization_sets.push_back(std::move(set));
        }
    }
    static const std::set<std::string> kKnown = {
        "language", "classes", "elements", "relations", "generalizations",
        "generalizationSets"};
    for (const auto& [key, value] : j.items())
        if (!kKnown.count(key)) doc.ignored_keys.push_back(key);
    return doc;
}

inline CanonicalModelDoc load_model_doc(const std::filesystem::path& file) {
    std::ifstream f(file);
    if (!f) throw DocParseError("cannot open: " + file.string());
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DocParseError(file.string() + ": " + e.what());
    }
    return parse_model_doc(j, file.stem().string());
}

}  // namespace cmining
