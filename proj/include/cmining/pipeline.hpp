#pragma once

// Staged pipeline: import -> filter -> mine -> deepen -> cluster -> viz.
// Every stage persists its artifacts under the output directory so runs
// are resumable; a stage whose outputs already exist is a no-op.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmining/clustering.hpp"
#include "cmining/filter.hpp"
#include "cmining/graph.hpp"
#include "cmining/importers.hpp"
#include "cmining/matcher.hpp"
#include "cmining/miner.hpp"
#include "cmining/render.hpp"
#include "cmining/store.hpp"

namespace cmining {

enum class Stage { kImport, kFilter, kMine, kDeepen, kCluster, kViz };

inline const std::vector<std::pair<Stage, std::string>>& stage_names() {
    static const std::vector<std::pair<Stage, std::string>> kNames = {
        {Stage::kImport, "import"},   {Stage::kFilter, "filter"},
        {Stage::kMine, "mine"},       {Stage::kDeepen, "deepen"},
        {Stage::kCluster, "cluster"}, {Stage::kViz, "viz"}};
    return kNames;
}

inline std::string to_string(Stage s) {
    for (const auto& [stage, name] : stage_names())
        if (stage == s) return name;
    return "?";
}

inline Stage parse_stage(const std::string& name) {
    for (const auto& [stage, n] : stage_names())
        if (n == name) return stage;
    throw std::invalid_argument("unknown stage: " + name);
}

struct PipelineConfig {
    std::filesystem::path input_dir;
    ModelLanguage language = ModelLanguage::kGeneric;
    FilterSpec filter;
    MiningConfig mining;
    ClusteringConfig clustering;
    std::filesystem::path known_patterns_dir;  // optional, .lpg files
    std::filesystem::path output_dir;
    std::vector<Stage> stages;  // executed in canonical order
    std::size_t viz_occurrence_cap = 20;  // per pattern
};

struct StageTiming {
    std::string stage;
    double seconds = 0;
    bool skipped = false;
};

struct RunSummary {
    std::vector<StageTiming> timings;
    std::size_t model_count = 0;
    std::size_t pattern_count = 0;
    std::size_t cluster_count = 0;
    bool mining_truncated = false;
};

class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config file: flat `key=value` lines with dotted keys; '#' starts a
// comment; list values are comma-separated.

namespace detail {

inline std::set<std::string> parse_label_list(const std::string& value) {
    std::set<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        if (!t.empty()) out.insert(t);
    }
    return out;
}

}  // namespace detail

inline void apply_config_entry(PipelineConfig& config, const std::string& key,
                               const std::string& value) {
    if (key == "input") config.input_dir = value;
    else if (key == "language") config.language = parse_language(value);
    else if (key == "out") config.output_dir = value;
    else if (key == "filter.select")
        config.filter.select_labels = detail::parse_label_list(value);
    else if (key == "filter.remove")
        config.filter.remove_labels = detail::parse_label_list(value);
    else if (key == "filter.removeEdges")
        config.filter.remove_edge_labels = detail::parse_label_list(value);
    else if (key == "filter.dropProperties")
        config.filter.drop_properties = value == "true" || value == "1";
    else if (key == "mining.minSupport")
        config.mining.min_support = std::stoul(value);
    else if (key == "mining.minNodes")
        config.mining.min_nodes = std::stoul(value);
    else if (key == "mining.maxEdges")
        config.mining.max_edges = std::stoul(value);
    else if (key == "mining.timeoutSeconds")
        config.mining.timeout_seconds = std::stod(value);
    else if (key == "mining.knownDir")
        config.known_patterns_dir = value;
    else if (key == "clustering.gamma")
        config.clustering.similarity_threshold = std::stod(value);
    else if (key == "viz.occurrenceCap")
        config.viz_occurrence_cap = std::stoul(value);
    else if (key == "stages") {
        config.stages.clear();
        for (const std::string& s : detail::parse_label_list(value))
            config.stages.push_back(parse_stage(s));
    } else {
        throw PipelineError("unknown config key: " + key);
    }
}

inline PipelineConfig load_config_file(const std::filesystem::path& file) {
    std::ifstream f(file);
    if (!f) throw PipelineError("cannot open config: " + file.string());
    PipelineConfig config;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw PipelineError(file.string() + ":" + std::to_string(lineno) +
                                ": expected key=value");
        apply_config_entry(config, detail::trim(t.substr(0, eq)),
                           detail::trim(t.substr(eq + 1)));
    }
    return config;
}

// ---------------------------------------------------------------------------
// Artifact layout helpers.

namespace layout {

inline std::filesystem::path store_dir(const PipelineConfig& c) {
    return c.output_dir / "store";
}
inline std::filesystem::path filtered_dir(const PipelineConfig& c) {
    return c.output_dir / "filtered";
}
inline std::filesystem::path patterns_dir(const PipelineConfig& c) {
    return c.output_dir / "patterns";
}
inline std::filesystem::path occurrences_dir(const PipelineConfig& c) {
    return c.output_dir / "occurrences";
}
inline std::filesystem::path clusters_dir(const PipelineConfig& c) {
    return c.output_dir / "clusters";
}
inline std::filesystem::path viz_dir(const PipelineConfig& c) {
    return c.output_dir / "viz";
}

}  // namespace layout

// Persisted mined pattern set: one .lpg per pattern plus index.tsv.
inline void write_patterns(const MiningResult& result,
                           const GraphDataset& mined_from,
                           const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ostringstream index;
    index << "pattern_index\tmodel_support\tnode_count\tedge_count\t"
             "supporting_model_ids\n";
    for (const Pattern& p : result.patterns) {
        detail::write_graph_file(
            p.graph, dir / ("pattern_" + std::to_string(p.pattern_index) + ".lpg"));
        index << p.pattern_index << '\t' << p.model_support << '\t'
              << p.graph.node_count() << '\t' << p.graph.edge_count() << '\t';
        bool first = true;
        for (std::size_t mi : p.supporting_models) {
            if (!first) index << ',';
            index << mined_from.graphs.at(mi).model_id;
            first = false;
        }
        index << "\n";
    }
    std::ofstream f(dir / "index.tsv", std::ios::binary);
    f << index.str();
    std::ofstream flag(dir / "truncated.flag", std::ios::binary);
    flag << (result.truncated ? "1" : "0") << "\n";
}

struct StoredPattern {
    ModelGraph graph;
    int pattern_index = -1;
    std::size_t model_support = 0;
    std::vector<std::string> supporting_model_ids;
};

inline std::vector<StoredPattern> read_patterns(const std::filesystem::path& dir) {
    std::ifstream index(dir / "index.tsv");
    if (!index)
        throw PipelineError("missing artifact: " + (dir / "index.tsv").string());
    std::vector<StoredPattern> out;
    std::string line;
    std::getline(index, line);  // header
    while (std::getline(index, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        StoredPattern p;
        std::string supp_field;
        std::size_t nodes, edges;
        in >> p.pattern_index >> p.model_support >> nodes >> edges >> supp_field;
        for (const std::string& id : detail::split(supp_field, ','))
            if (!id.empty()) p.supporting_model_ids.push_back(id);
        p.graph = read_graph_file(
            dir / ("pattern_" + std::to_string(p.pattern_index) + ".lpg"));
        out.push_back(std::move(p));
    }
    return out;
}

inline bool mining_truncated_flag(const std::filesystem::path& dir) {
    std::ifstream f(dir / "truncated.flag");
    std::string v;
    f >> v;
    return v == "1";
}

inline std::vector<ModelGraph> load_known_patterns(
    const std::filesystem::path& dir) {
    std::vector<ModelGraph> known;
    if (dir.empty()) return known;
    if (!std::filesystem::is_directory(dir))
        throw PipelineError("known-pattern directory missing: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".lpg") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        ModelGraph g = read_graph_file(file);
        min_dfs_code(g);  // rejects disconnected/edgeless graphs up front
        known.push_back(std::move(g));
    }
    return known;
}

// ---------------------------------------------------------------------------
// Stage execution.

namespace detail {

inline void require_artifact(const std::filesystem::path& p, const char* stage) {
    if (!std::filesystem::exists(p))
        throw PipelineError(std::string(stage) +
                            ": missing dependency artifact " + p.string());
}

inline void write_clusters_tsv(const std::vector<Cluster>& clusters,
                               const std::filesystem::path& file) {
    std::ostringstream out;
    out << "cluster_id\tmember_pattern_indices\n";
    for (const Cluster& c : clusters) {
        out << c.cluster_id << '\t';
        bool first = true;
        for (int m : c.member_pattern_indices) {
            if (!first) out << ',';
            out << m;
            first = false;
        }
        out << "\n";
    }
    std::ofstream f(file, std::ios::binary);
    f << out.str();
}

}  // namespace detail

inline std::vector<Cluster> read_clusters_tsv(const std::filesystem::path& file) {
    std::ifstream f(file);
    if (!f) throw PipelineError("missing clusters file: " + file.string());
    std::vector<Cluster> out;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        Cluster c;
        std::string members;
        in >> c.cluster_id >> members;
        for (const std::string& m : detail::split(members, ','))
            if (!m.empty()) c.member_pattern_indices.push_back(std::stoi(m));
        out.push_back(std::move(c));
    }
    return out;
}

class Pipeline {
public:
    explicit Pipeline(PipelineConfig config) : config_(std::move(config)) {
        if (config_.stages.empty())
            for (const auto& [stage, name] : stage_names())
                config_.stages.push_back(stage);
    }

    RunSummary run() {
        std::filesystem::create_directories(config_.output_dir);
        // Canonical order regardless of how stages were listed.
        for (const auto& [stage, name] : stage_names()) {
            if (std::find(config_.stages.begin(), config_.stages.end(), stage) ==
                config_.stages.end())
                continue;
            auto t0 = std::chrono::steady_clock::now();
            bool skipped = execute(stage);
            auto t1 = std::chrono::steady_clock::now();
            summary_.timings.push_back(
                {name, std::chrono::duration<double>(t1 - t0).count(), skipped});
        }
        write_summary();
        return summary_;
    }

    const RunSummary& summary() const { return summary_; }

private:
    // Returns true when the stage was already satisfied and skipped.
    bool execute(Stage stage) {
        switch (stage) {
            case Stage::kImport: return run_import();
            case Stage::kFilter: return run_filter();
            case Stage::kMine: return run_mine();
            case Stage::kDeepen: return run_deepen();
            case Stage::kCluster: return run_cluster();
            case Stage::kViz: return run_viz();
        }
        return false;
    }

    bool run_import() {
        auto dir = layout::store_dir(config_);
        if (std::filesystem::exists(dir / "manifest.txt")) {
            summary_.model_count = read_store(dir).graphs.size();
            return true;
        }
        auto [dataset, reports] = load_directory(config_.input_dir, config_.language);
        write_store(dataset, dir);
        std::ofstream rep(config_.output_dir / "import_report.txt");
        for (const ImportReport& r : reports) {
            rep << r.doc_id << ": mapped " << r.mapped_total() << "\n";
            for (const std::string& s : r.skipped) rep << "  skipped: " << s << "\n";
        }
        summary_.model_count = dataset.graphs.size();
        return false;
    }

    bool run_filter() {
        auto dir = layout::filtered_dir(config_);
        if (std::filesystem::exists(dir / "manifest.txt")) return true;
        detail::require_artifact(layout::store_dir(config_) / "manifest.txt",
                                 "filter");
        GraphDataset store = read_store(layout::store_dir(config_));
        GraphDataset filtered = apply_filter(store, config_.filter);
        write_store(filtered, dir);
        std::ofstream rep(config_.output_dir / "filter_report.txt");
        rep << filter_report(store, filtered);
        return false;
    }

    bool run_mine() {
        auto dir = layout::patterns_dir(config_);
        if (std::filesystem::exists(dir / "index.tsv")) {
            summary_.pattern_count = read_patterns(dir).size();
            summary_.mining_truncated = mining_truncated_flag(dir);
            return true;
        }
        // Mining consumes the filtered dataset when present, else the store.
        std::filesystem::path input = layout::filtered_dir(config_);
        if (!std::filesystem::exists(input / "manifest.txt"))
            input = layout::store_dir(config_);
        detail::require_artifact(input / "manifest.txt", "mine");
        GraphDataset dataset = read_store(input);

        MiningConfig mc = config_.mining;
        if (!config_.known_patterns_dir.empty())
            mc.known_patterns = load_known_patterns(config_.known_patterns_dir);
        MiningResult result = mine(dataset, mc);
        write_patterns(result, dataset, dir);
        summary_.pattern_count = result.patterns.size();
        summary_.mining_truncated = result.truncated;
        return false;
    }

    bool run_deepen() {
        auto dir = layout::occurrences_dir(config_);
        if (std::filesystem::exists(dir / "frequency.tsv")) return true;
        detail::require_artifact(layout::patterns_dir(config_) / "index.tsv",
                                 "deepen");
        detail::require_artifact(layout::store_dir(config_) / "manifest.txt",
                                 "deepen");
        // Deepening queries the pristine store with subset-label semantics.
        GraphDataset store = read_store(layout::store_dir(config_));
        std::vector<StoredPattern> patterns =
            read_patterns(layout::patterns_dir(config_));
        std::filesystem::create_directories(dir);

        std::ostringstream freq;
        freq << "pattern_index\tmodel_frequency\ttotal_frequency\tper_model\n";
        for (const StoredPattern& p : patterns) {
            auto pdir = dir / ("pattern_" + std::to_string(p.pattern_index));
            std::filesystem::create_directories(pdir);
            FrequencyReport report;
            report.pattern_index = p.pattern_index;
            for (const ModelGraph& model : store.graphs) {
                OccurrenceList occs = find_occurrences(
                    p.graph, model, LabelSemantics::kSubset, p.pattern_index);
                std::ostringstream rows;
                for (const Occurrence& occ : occs.occurrences) {
                    bool first = true;
                    for (const auto& [pn, mn] : occ.node_binding) {
                        if (!first) rows << ';';
                        rows << pn << "->" << mn;
                        first = false;
                    }
                    rows << '\t';
                    first = true;
                    for (const auto& [pn, props] : occ.bound_properties) {
                        auto name = props.find("name");
                        if (name == props.end()) continue;
                        if (!first) rows << ';';
                        rows << pn << '=' << url_encode(name->second);
                        first = false;
                    }
                    rows << "\n";
                }
                std::ofstream mf(pdir / (model.model_id + ".tsv"), std::ios::binary);
                mf << rows.str();
                std::size_t n = occs.occurrences.size();
                report.per_model_counts[model.model_id] = n;
                report.total_frequency += n;
                if (n > 0) ++report.model_frequency;
            }
            freq << report.pattern_index << '\t' << report.model_frequency << '\t'
                 << report.total_frequency << '\t';
            bool first = true;
            for (const ModelGraph& model : store.graphs) {
                if (!first) freq << ';';
                freq << model.model_id << '='
                     << report.per_model_counts[model.model_id];
                first = false;
            }
            freq << "\n";
        }
        std::ofstream f(dir / "frequency.tsv", std::ios::binary);
        f << freq.str();
        return false;
    }

    bool run_cluster() {
        auto dir = layout::clusters_dir(config_);
        if (std::filesystem::exists(dir / "clusters.tsv")) {
            summary_.cluster_count = read_clusters_tsv(dir / "clusters.tsv").size();
            return true;
        }
        detail::require_artifact(layout::patterns_dir(config_) / "index.tsv",
                                 "cluster");
        std::vector<StoredPattern> stored =
            read_patterns(layout::patterns_dir(config_));
        std::filesystem::create_directories(dir);
        std::vector<Cluster> clusters;
        if (!stored.empty()) {
            std::vector<Pattern> patterns;
            patterns.reserve(stored.size());
            for (const StoredPattern& p : stored) {
                Pattern pat;
                pat.graph = p.graph;
                pat.pattern_index = p.pattern_index;
                patterns.push_back(std::move(pat));
            }
            clusters = cluster(patterns, config_.clustering);
        }
        detail::write_clusters_tsv(clusters, dir / "clusters.tsv");
        summary_.cluster_count = clusters.size();
        return false;
    }

    bool run_viz() {
        auto dir = layout::viz_dir(config_);
        if (std::filesystem::exists(dir / ".complete")) return true;
        detail::require_artifact(layout::patterns_dir(config_) / "index.tsv", "viz");
        std::vector<StoredPattern> patterns =
            read_patterns(layout::patterns_dir(config_));
        std::filesystem::create_directories(dir);

        bool archimate = config_.language == ModelLanguage::kArchimate;
        std::optional<GraphDataset> store;
        if (std::filesystem::exists(layout::store_dir(config_) / "manifest.txt"))
            store = read_store(layout::store_dir(config_));

        for (const StoredPattern& p : patterns) {
            DiagramModel d = dereify(p.graph);
            std::string text =
                archimate ? emit_archimate_diagram(d) : emit_class_diagram(d);
            std::ofstream f(
                dir / ("pattern_" + std::to_string(p.pattern_index) + ".puml"),
                std::ios::binary);
            f << text;

            // Occurrence renderings, when the store is at hand.
            if (!store) continue;
            std::size_t emitted = 0;
            for (const ModelGraph& model : store->graphs) {
                if (emitted >= config_.viz_occurrence_cap) break;
                OccurrenceList occs =
                    find_occurrences(p.graph, model, LabelSemantics::kSubset);
                for (const Occurrence& occ : occs.occurrences) {
                    if (emitted >= config_.viz_occurrence_cap) break;
                    ModelGraph bound = p.graph;
                    for (const auto& [pn, mn] : occ.node_binding)
                        bound.nodes[pn].properties = model.nodes[mn].properties;
                    DiagramModel od = dereify(bound);
                    std::string otext = archimate ? emit_archimate_diagram(od)
                                                  : emit_class_diagram(od);
                    std::ofstream of(
                        dir / ("pattern_" + std::to_string(p.pattern_index) +
                               "_occ_" + std::to_string(emitted) + ".puml"),
                        std::ios::binary);
                    of << otext;
                    ++emitted;
                }
            }
        }
        std::ofstream marker(dir / ".complete", std::ios::binary);
        marker << "ok\n";
        return false;
    }

    void write_summary() {
        std::ostringstream out;
        out << "stage\tseconds\tskipped\n";
        for (const StageTiming& t : summary_.timings) {
            std::ostringstream sec;
            sec.setf(std::ios::fixed);
            sec.precision(3);
            sec << t.seconds;
            out << t.stage << '\t' << sec.str() << '\t' << (t.skipped ? 1 : 0)
                << "\n";
        }
        out << "models\t" << summary_.model_count << "\t\n";
        out << "patterns\t" << summary_.pattern_count << "\t\n";
        out << "clusters\t" << summary_.cluster_count << "\t\n";
        out << "mining_truncated\t" << (summary_.mining_truncated ? 1 : 0) << "\t\n";
        std::ofstream f(config_.output_dir / "summary.tsv", std::ios::binary);
        f << out.str();
    }

    PipelineConfig config_;
    RunSummary summary_;
};

// Four-column timing table mirroring the per-stage measurements.
inline std::string stage_timings(const RunSummary& summary) {
    std::ostringstream out;
    out << "import (s)\tmining (s)\tclustering (s)\tviz. (s)\n";
    auto find = [&](const char* name) -> std::string {
        for (const StageTiming& t : summary.timings)
            if (t.stage == name) {
                std::ostringstream sec;
                sec.setf(std::ios::fixed);
                sec.precision(3);
                sec << t.seconds;
                return sec.str();
            }
        return "-";
    };
    out << find("import") << '\t' << find("mine") << '\t' << find("cluster")
        << '\t' << find("viz") << "\n";
    return out.str();
}

}  // namespace cmining
