#pragma once

// Visualization: de-reifies pattern graphs back into diagram form (boxes
// plus multi-directed links with multiplicities) and emits PlantUML text
// in class-diagram and ArchiMate notations.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmining/graph.hpp"
#include "cmining/importers.hpp"

namespace cmining {

struct DiagramBox {
    int id = 0;
    std::string display_name;
    std::string stereotype;    // or element type; empty for placeholders
    bool placeholder = false;  // dashed stand-in for a missing endpoint
};

struct DiagramLink {
    enum class Kind { kAssociation, kGeneralization };
    Kind kind = Kind::kAssociation;
    std::string label;  // relation stereotype / relationship type
    int source_box = -1;
    int target_box = -1;
    std::optional<std::string> source_multiplicity;
    std::optional<std::string> target_multiplicity;
};

struct DiagramNote {
    std::string text;       // e.g. generalization-set flags
    std::vector<int> boxes; // attached boxes
};

struct DiagramModel {
    std::vector<DiagramBox> boxes;
    std::vector<DiagramLink> links;
    std::vector<DiagramNote> notes;
};

class RenderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// ArchiMate relationship-type vocabulary; everything else with source or
// target edges is decided structurally.
inline const std::set<std::string>& archimate_relationship_types() {
    static const std::set<std::string> kTypes = {
        "Assignment", "Triggering",  "Flow",        "Serving",
        "Realization", "Access",     "Association", "Aggregation",
        "Composition", "Influence",  "Specialization"};
    return kTypes;
}

inline const std::set<std::string>& ontouml_relation_stereotypes() {
    static const std::set<std::string> kTypes = {
        "mediation", "characterization", "material",   "formal",
        "componentOf", "memberOf",       "association", "relation"};
    return kTypes;
}

enum class NodeRole { kBox, kRelation, kGeneralization, kCardinality, kGenset };

inline NodeRole classify_node(const ModelGraph& g, const Node& n) {
    bool has_card_marker = n.construct_labels.count(kCardSrc) ||
                           n.construct_labels.count(kCardTgt);
    bool is_gen = n.construct_labels.count(kGenLabel);
    bool is_genset = n.construct_labels.count(kGensetLabel);
    bool vocab_relation = false;
    for (const std::string& l : n.construct_labels)
        if (archimate_relationship_types().count(l) ||
            ontouml_relation_stereotypes().count(l))
            vocab_relation = true;

    int role_edges = 0, card_edges = 0;
    for (const Edge& e : g.edges) {
        if (e.endpoint_a != n.id && e.endpoint_b != n.id) continue;
        if (e.label == kEdgeCardinalities) ++card_edges;
        else ++role_edges;
    }

    int kinds = (has_card_marker ? 1 : 0) + (is_gen ? 1 : 0) + (is_genset ? 1 : 0) +
                (vocab_relation ? 1 : 0);
    if (kinds > 1)
        throw RenderError("node " + std::to_string(n.id) +
                          " carries contradictory role labels");
    if (has_card_marker) return NodeRole::kCardinality;
    if (is_gen) return NodeRole::kGeneralization;
    if (is_genset) return NodeRole::kGenset;
    if (vocab_relation) return NodeRole::kRelation;
    // Structural fallback: a node with an attached cardinalities edge but no
    // end marker must be the relation side of it.
    if (card_edges > 0) return NodeRole::kRelation;
    (void)role_edges;
    return NodeRole::kBox;
}

struct IncidentEdges {
    std::optional<NodeId> source, target, general, specific;
    std::vector<NodeId> cardinalities;
    std::vector<NodeId> plain_general;  // genset membership links
};

inline IncidentEdges incident_roles(const ModelGraph& g, NodeId id,
                                    const std::vector<NodeRole>& roles) {
    IncidentEdges inc;
    for (const Edge& e : g.edges) {
        NodeId other;
        if (e.endpoint_a == id) other = e.endpoint_b;
        else if (e.endpoint_b == id) other = e.endpoint_a;
        else continue;
        if (e.label == kEdgeSource) inc.source = other;
        else if (e.label == kEdgeTarget) inc.target = other;
        else if (e.label == kEdgeGeneral) {
            if (roles[other] == NodeRole::kGeneralization ||
                roles[id] == NodeRole::kGenset)
                inc.plain_general.push_back(other);
            else inc.general = other;
        } else if (e.label == kEdgeSpecific) inc.specific = other;
        else if (e.label == kEdgeCardinalities) inc.cardinalities.push_back(other);
    }
    return inc;
}

inline std::string primary_label(const Node& n) {
    // Drop artifact markers; show the remaining labels joined.
    std::string out;
    for (const std::string& l : n.construct_labels) {
        if (l == kCardSrc || l == kCardTgt) continue;
        if (!out.empty()) out += ' ';
        out += l;
    }
    return out;
}

}  // namespace detail

// Turns a reified pattern (or occurrence) graph back into diagram form.
// Relation nodes missing an endpoint get a dashed placeholder box named
// class_0, class_1, ... in discovery order.
inline DiagramModel dereify(const ModelGraph& g) {
    DiagramModel d;
    std::vector<detail::NodeRole> roles;
    roles.reserve(g.nodes.size());
    for (const Node& n : g.nodes) roles.push_back(detail::classify_node(g, n));

    std::map<NodeId, int> box_of_node;
    for (const Node& n : g.nodes) {
        if (roles[n.id] != detail::NodeRole::kBox) continue;
        DiagramBox box;
        box.id = static_cast<int>(d.boxes.size());
        box.stereotype = detail::primary_label(n);
        auto name = n.properties.find("name");
        box.display_name = name != n.properties.end() ? name->second : box.stereotype;
        box_of_node[n.id] = box.id;
        d.boxes.push_back(std::move(box));
    }

    int placeholder_count = 0;
    auto box_or_placeholder = [&](std::optional<NodeId> endpoint) {
        if (endpoint && box_of_node.count(*endpoint)) return box_of_node[*endpoint];
        DiagramBox box;
        box.id = static_cast<int>(d.boxes.size());
        box.display_name = "class_" + std::to_string(placeholder_count++);
        box.placeholder = true;
        d.boxes.push_back(box);
        return box.id;
    };

    for (const Node& n : g.nodes) {
        detail::NodeRole role = roles[n.id];
        if (role == detail::NodeRole::kRelation) {
            detail::IncidentEdges inc = detail::incident_roles(g, n.id, roles);
            DiagramLink link;
            link.kind = n.construct_labels.count("Specialization")
                            ? DiagramLink::Kind::kGeneralization
                            : DiagramLink::Kind::kAssociation;
            link.label = detail::primary_label(n);
            auto rel_name = n.properties.find("name");
            if (rel_name != n.properties.end())
                link.label += link.label.empty() ? rel_name->second
                                                 : " " + rel_name->second;
            if (link.kind == DiagramLink::Kind::kGeneralization) {
                link.source_box = box_or_placeholder(inc.specific);
                link.target_box = box_or_placeholder(inc.general);
            } else {
                link.source_box = box_or_placeholder(inc.source);
                link.target_box = box_or_placeholder(inc.target);
            }
            for (NodeId card : inc.cardinalities) {
                const Node& cn = g.nodes[card];
                std::string value = detail::primary_label(cn);
                if (cn.construct_labels.count(kCardSrc))
                    link.source_multiplicity = value;
                else
                    link.target_multiplicity = value;
            }
            d.links.push_back(std::move(link));
        } else if (role == detail::NodeRole::kGeneralization) {
            detail::IncidentEdges inc = detail::incident_roles(g, n.id, roles);
            DiagramLink link;
            link.kind = DiagramLink::Kind::kGeneralization;
            link.source_box = box_or_placeholder(inc.specific);  // child
            link.target_box = box_or_placeholder(inc.general);   // parent
            d.links.push_back(std::move(link));
        } else if (role == detail::NodeRole::kGenset) {
            detail::IncidentEdges inc = detail::incident_roles(g, n.id, roles);
            DiagramNote note;
            note.text = detail::primary_label(n);
            // Attach to the child boxes of the member generalizations.
            for (NodeId member : inc.plain_general) {
                detail::IncidentEdges ginc = detail::incident_roles(g, member, roles);
                if (ginc.specific && box_of_node.count(*ginc.specific))
                    note.boxes.push_back(box_of_node[*ginc.specific]);
            }
            std::sort(note.boxes.begin(), note.boxes.end());
            d.notes.push_back(std::move(note));
        }
    }
    return d;
}

namespace detail {

inline std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\'';
        else out += c;
    }
    out += '"';
    return out;
}

inline std::vector<std::size_t> link_emit_order(const DiagramModel& d) {
    std::vector<std::size_t> order(d.links.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const DiagramLink& la = d.links[a];
        const DiagramLink& lb = d.links[b];
        return std::tie(la.source_box, la.target_box, la.label) <
               std::tie(lb.source_box, lb.target_box, lb.label);
    });
    return order;
}

}  // namespace detail

// OntoUML-like PlantUML class diagram. Deterministic: boxes by id, links
// by (source, target, label).
inline std::string emit_class_diagram(const DiagramModel& d) {
    std::ostringstream out;
    out << "@startuml\n";
    out << "hide empty members\n";
    for (const DiagramBox& box : d.boxes) {
        std::string alias = "b" + std::to_string(box.id);
        out << "class " << detail::quoted(box.display_name) << " as " << alias;
        if (!box.stereotype.empty()) out << " <<" << box.stereotype << ">>";
        if (box.placeholder) out << " #line.dashed";
        out << "\n";
    }
    for (std::size_t i : detail::link_emit_order(d)) {
        const DiagramLink& link = d.links[i];
        std::string src = "b" + std::to_string(link.source_box);
        std::string tgt = "b" + std::to_string(link.target_box);
        if (link.kind == DiagramLink::Kind::kGeneralization) {
            out << src << " --|> " << tgt << "\n";
        } else {
            out << src;
            if (link.source_multiplicity)
                out << " " << detail::quoted(*link.source_multiplicity);
            out << " -- ";
            if (link.target_multiplicity)
                out << detail::quoted(*link.target_multiplicity) << " ";
            out << tgt;
            if (!link.label.empty()) out << " : " << link.label;
            out << "\n";
        }
    }
    for (std::size_t i = 0; i < d.notes.size(); ++i) {
        const DiagramNote& note = d.notes[i];
        std::string alias = "n" + std::to_string(i);
        out << "note " << detail::quoted(note.text) << " as " << alias << "\n";
        for (int b : note.boxes)
            out << alias << " .. b" << b << "\n";
    }
    out << "@enduml\n";
    return out.str();
}

namespace detail {

inline std::string archimate_layer(const std::string& type) {
    if (type.rfind("Business", 0) == 0) return "Business";
    if (type.rfind("Application", 0) == 0 || type == "DataObject")
        return "Application";
    if (type.rfind("Technology", 0) == 0 || type == "Artifact" ||
        type == "Node" || type == "Device")
        return "Technology";
    if (type.rfind("Motivation", 0) == 0 || type == "Goal" || type == "Driver")
        return "Motivation";
    return "Other";
}

}  // namespace detail

// ArchiMate-notation PlantUML. Unknown element types fall back to a
// rectangle with the type as stereotype.
inline std::string emit_archimate_diagram(const DiagramModel& d) {
    std::ostringstream out;
    out << "@startuml\n";
    for (const DiagramBox& box : d.boxes) {
        std::string alias = "b" + std::to_string(box.id);
        if (box.placeholder) {
            out << "rectangle " << detail::quoted(box.display_name) << " as "
                << alias << " #line.dashed\n";
            continue;
        }
        std::string layer = detail::archimate_layer(box.stereotype);
        if (layer == "Other") {
            out << "rectangle " << detail::quoted(box.display_name) << " as "
                << alias << " <<" << box.stereotype << ">>\n";
        } else {
            out << "archimate #" << layer << " " << detail::quoted(box.display_name)
                << " as " << alias << " <<" << box.stereotype << ">>\n";
        }
    }
    for (std::size_t i : detail::link_emit_order(d)) {
        const DiagramLink& link = d.links[i];
        std::string src = "b" + std::to_string(link.source_box);
        std::string tgt = "b" + std::to_string(link.target_box);
        if (link.kind == DiagramLink::Kind::kGeneralization)
            out << src << " -up-|> " << tgt << "\n";
        else
            out << src << " --> " << tgt
                << (link.label.empty() ? "" : " : " + link.label) << "\n";
    }
    out << "@enduml\n";
    return out.str();
}

}  // namespace cmining
