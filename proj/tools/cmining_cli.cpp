#include <CLI11.hpp>

#include <deque>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cmining/clustering.hpp"
#include "cmining/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStageFailure = 2;
constexpr int kExitTruncated = 3;

struct CommonFlags {
    std::string config_file;
    std::string input;
    std::string language;
    std::optional<std::size_t> min_support;
    std::optional<std::size_t> min_nodes;
    std::string known_dir;
    std::optional<double> gamma;
    std::string out;
    std::optional<double> timeout;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_file, "Pipeline config file");
    cmd->add_option("--input", flags.input, "Source document directory");
    cmd->add_option("--language", flags.language,
                    "Model language: generic|ontouml|archimate");
    cmd->add_option("--min-support", flags.min_support,
                    "Minimum model support for mining");
    cmd->add_option("--min-nodes", flags.min_nodes,
                    "Minimum pattern node count");
    cmd->add_option("--known", flags.known_dir,
                    "Directory of known-pattern .lpg files to exclude");
    cmd->add_option("--gamma", flags.gamma, "Clustering similarity threshold");
    cmd->add_option("--out", flags.out, "Output directory");
    cmd->add_option("--timeout", flags.timeout, "Mining timeout in seconds");
}

// Config file first, then command-line overrides.
cmining::PipelineConfig build_config(const CommonFlags& flags,
                                     std::vector<cmining::Stage> stages) {
    cmining::PipelineConfig config;
    if (!flags.config_file.empty())
        config = cmining::load_config_file(flags.config_file);
    if (!flags.input.empty()) config.input_dir = flags.input;
    if (!flags.language.empty())
        config.language = cmining::parse_language(flags.language);
    if (flags.min_support) config.mining.min_support = *flags.min_support;
    if (flags.min_nodes) config.mining.min_nodes = *flags.min_nodes;
    if (!flags.known_dir.empty()) config.known_patterns_dir = flags.known_dir;
    if (flags.gamma) config.clustering.similarity_threshold = *flags.gamma;
    if (!flags.out.empty()) config.output_dir = flags.out;
    if (flags.timeout) config.mining.timeout_seconds = *flags.timeout;
    if (!stages.empty()) config.stages = std::move(stages);
    if (config.output_dir.empty())
        throw cmining::PipelineError("no output directory (--out or out=...)");
    return config;
}

int run_stages(const CommonFlags& flags, std::vector<cmining::Stage> stages) {
    cmining::PipelineConfig config;
    try {
        config = build_config(flags, std::move(stages));
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        cmining::Pipeline pipeline(config);
        cmining::RunSummary summary = pipeline.run();
        for (const cmining::StageTiming& t : summary.timings)
            std::cout << t.stage << (t.skipped ? " (cached) " : " ") << t.seconds
                      << "s\n";
        std::cout << "models=" << summary.model_count
                  << " patterns=" << summary.pattern_count
                  << " clusters=" << summary.cluster_count << "\n";
        if (summary.mining_truncated) {
            std::cerr << "mining truncated by timeout; results are partial\n";
            return kExitTruncated;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "stage failure: " << e.what() << "\n";
        return kExitStageFailure;
    }
}

int run_eval_clustering(const std::string& predicted_file,
                        const std::string& truth_file) {
    try {
        auto predicted = cmining::read_clusters_tsv(predicted_file);
        auto truth = cmining::read_clusters_tsv(truth_file);
        double acc = cmining::pairwise_accuracy(predicted, truth);
        std::cout.setf(std::ios::fixed);
        std::cout.precision(4);
        std::cout << "pairwise_accuracy\t" << acc << "\n";
        for (const auto& [pred, tru] : cmining::align_clusters(predicted, truth))
            std::cout << "align\t" << pred << "\t" << tru << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "eval failure: " << e.what() << "\n";
        return kExitStageFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequent-structure mining over conceptual models"};
    app.require_subcommand(1);

    struct SubCmd {
        CLI::App* cmd;
        std::vector<cmining::Stage> stages;
        CommonFlags flags;
    };
    // deque: CLI11 holds references into each SubCmd's flags, so element
    // addresses must stay stable while more subcommands are appended.
    std::deque<SubCmd> subs;
    auto add_stage_cmd = [&](const char* name, const char* desc,
                             std::vector<cmining::Stage> stages) {
        subs.push_back({app.add_subcommand(name, desc), std::move(stages), {}});
        add_common_flags(subs.back().cmd, subs.back().flags);
    };
    add_stage_cmd("import", "Import source documents into the graph store",
                  {cmining::Stage::kImport});
    add_stage_cmd("filter", "Project the store onto selected constructs",
                  {cmining::Stage::kFilter});
    add_stage_cmd("mine", "Mine frequent structures", {cmining::Stage::kMine});
    add_stage_cmd("deepen", "Enumerate pattern occurrences in the store",
                  {cmining::Stage::kDeepen});
    add_stage_cmd("cluster", "Group mined patterns by feature similarity",
                  {cmining::Stage::kCluster});
    add_stage_cmd("viz", "Emit PlantUML diagrams for patterns and occurrences",
                  {cmining::Stage::kViz});
    add_stage_cmd("run", "Run every stage in order", {});

    auto* eval = app.add_subcommand(
        "eval-clustering",
        "Pairwise accuracy and cluster alignment against a truth file");
    std::string predicted_file, truth_file;
    eval->add_option("--predicted", predicted_file, "Predicted clusters.tsv")
        ->required();
    eval->add_option("--truth", truth_file, "Ground-truth clusters.tsv")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (eval->parsed()) return run_eval_clustering(predicted_file, truth_file);
    for (const SubCmd& sub : subs)
        if (sub.cmd->parsed()) return run_stages(sub.flags, sub.stages);
    return kExitUsage;
}
