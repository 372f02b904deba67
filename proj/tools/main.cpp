#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "exemplars/builders.hpp"
#include "exemplars/export.hpp"
#include "exemplars/io.hpp"
#include "exemplars/network.hpp"
#include "exemplars/relation.hpp"
#include "exemplars/robustness.hpp"
#include "exemplars/scoring.hpp"

namespace ex = exemplars;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // validation / domain errors
constexpr int kExitIo = 2;      // I/O and parse errors
constexpr int kExitUsage = 3;   // bad command line

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ex::write_file(out_path, text);
    }
}

ex::TiePolicy parse_policy(const std::string& name) {
    return name == "midrank" ? ex::TiePolicy::MidRank : ex::TiePolicy::IndexOrder;
}

struct NetworkOptions {
    std::size_t k = 0;
    bool auto_k = false;
    std::string graph_path;
};

int run_network(const ex::RelationMatrix& relation, ex::TiePolicy policy,
                const NetworkOptions& opts, const std::string& format,
                const std::string& out_path) {
    const auto ranks = ex::rank_table(relation, policy);
    const auto scores = ex::aggregated_scores(ranks);

    ex::RunReport report;
    report.labels = relation.labels();
    report.scores = scores;
    report.standard = ex::standard_object(scores);

    ex::NeighborhoodSpec spec;
    if (!opts.graph_path.empty()) {
        spec = ex::NeighborhoodSpec::graph(ex::load_adjacency(opts.graph_path, relation.labels()));
    } else {
        std::size_t k = opts.k;
        if (opts.auto_k) {
            report.sweep = ex::scale_sweep(scores, ranks);
            k = report.sweep->k_optimum;
        }
        spec = ex::NeighborhoodSpec::knn(k);
        report.k = k;
    }
    report.network = ex::build_network(scores, ranks, spec);

    if (format == "dot") {
        emit(ex::export_dot(*report.network, scores, relation.labels()), out_path);
    } else {
        emit(ex::export_report(report), out_path);
    }
    std::cerr << "standard=" << relation.labels()[report.standard]
              << " exemplars=" << report.network->exemplars.size()
              << " k=" << (report.k ? std::to_string(*report.k) : std::string("graph")) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borda-score exemplar extraction from relational datasets"};
    app.require_subcommand(1);

    std::string input;
    std::string out_path;
    std::string durations_path;
    std::string affinity_path;
    std::string tie_policy = "index";
    std::string format = "dot";
    bool labeled = false;
    NetworkOptions net_opts;
    std::size_t bootstraps = 200;
    std::optional<std::uint64_t> seed;
    std::string mode = "spread";
    std::string exclusion = "complement";
    std::vector<double> domain;
    std::size_t step = 0;
    double cap_percent = 300.0;
    std::vector<std::string> image_paths;

    auto add_relation_input = [&](CLI::App* cmd) {
        cmd->add_option("relation", input, "relation CSV file")->required();
        cmd->add_flag("--labels", labeled, "input carries labels");
    };

    auto* validate = app.add_subcommand("validate", "check the relation rules on a CSV table");
    add_relation_input(validate);

    auto* score = app.add_subcommand("score", "aggregated Borda scores and the standard");
    add_relation_input(score);
    score->add_option("--tie-policy", tie_policy, "index|midrank")
        ->check(CLI::IsMember({"index", "midrank"}));
    score->add_option("--out", out_path, "score CSV output path");

    auto* network = app.add_subcommand("network", "build the exemplar network");
    add_relation_input(network);
    network->add_option("--tie-policy", tie_policy, "index|midrank")
        ->check(CLI::IsMember({"index", "midrank"}));
    auto* k_opt = network->add_option("--k", net_opts.k, "scale factor (neighborhood size)");
    auto* auto_k = network->add_flag("--auto-k", net_opts.auto_k, "sweep and use k_optimum");
    auto* graph_opt =
        network->add_option("--graph", net_opts.graph_path, "adjacency file (implicit neighborhoods)");
    k_opt->excludes(auto_k)->excludes(graph_opt);
    auto_k->excludes(graph_opt);
    network->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    network->add_option("--out", out_path, "output path");

    auto* sweep = app.add_subcommand("sweep", "exemplar counts and durations over every scale");
    add_relation_input(sweep);
    sweep->add_option("--tie-policy", tie_policy, "index|midrank")
        ->check(CLI::IsMember({"index", "midrank"}));
    sweep->add_option("--out", out_path, "sweep CSV output path");
    sweep->add_option("--durations", durations_path, "durations CSV output path");

    auto* bootstrap = app.add_subcommand("bootstrap", "bootstrap stability of the standard");
    add_relation_input(bootstrap);
    bootstrap->add_option("--bootstraps", bootstraps, "number of resamples");
    bootstrap->add_option("--seed", seed, "RNG seed (required)")->required();
    bootstrap->add_option("--out", out_path, "report JSON output path");

    auto* outliers = app.add_subcommand("outliers", "outlier-injection robustness experiment");
    outliers->add_option("points", input, "2-D points CSV file")->required();
    outliers->add_flag("--labels", labeled, "input carries labels");
    outliers->add_option("--mode", mode, "spread|duplicate")
        ->check(CLI::IsMember({"spread", "duplicate"}));
    outliers->add_option("--seed", seed, "RNG seed (required)")->required();
    outliers->add_option("--bootstraps", bootstraps, "resamples for the clean top-3");
    outliers->add_option("--step", step, "outliers per batch (default 1% of n)");
    outliers->add_option("--cap-percent", cap_percent, "stop at this outlier mass, % of n");
    outliers->add_option("--domain", domain, "initial domain x_lo x_hi y_lo y_hi")
        ->expected(4);
    outliers->add_option("--exclusion", exclusion, "complement|both")
        ->check(CLI::IsMember({"complement", "both"}));
    outliers->add_option("--out", out_path, "report JSON output path");

    auto* relation_cmd = app.add_subcommand("relation", "build a relation matrix from raw data");
    relation_cmd->require_subcommand(1);
    auto* euclid = relation_cmd->add_subcommand("euclid", "Euclidean distances between points");
    euclid->add_option("points", input, "points CSV file")->required();
    euclid->add_flag("--labels", labeled, "input carries labels");
    euclid->add_option("--out", out_path, "relation CSV output path");
    auto* hausdorff = relation_cmd->add_subcommand(
        "hausdorff", "directed Hausdorff distances between binary images");
    hausdorff->add_option("images", image_paths, "PBM (P1) image files")->required();
    hausdorff->add_option("--out", out_path, "relation CSV output path");
    auto* coauthor = relation_cmd->add_subcommand(
        "coauthor", "co-authorship costs from publication records");
    coauthor->add_option("publications", input, "JSON-lines publication file")->required();
    coauthor->add_option("--out", out_path, "relation CSV output path");
    coauthor->add_option("--affinity-out", affinity_path, "raw affinity CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            const auto raw = ex::parse_relation_raw(ex::read_file(input), labeled);
            const auto report = ex::validate_relation(raw.values);
            std::cout << (report.valid ? "valid" : "invalid")
                      << (report.is_symmetric ? " (symmetric)" : " (asymmetric)") << "\n";
            for (const auto& v : report.violations) {
                std::cout << "violation: " << v.rule << " at (" << v.row << ", " << v.col
                          << ") value " << ex::format_double(v.value) << "\n";
            }
            return report.valid ? kExitOk : kExitDomain;
        }
        if (score->parsed()) {
            const auto relation = ex::load_relation(input, labeled);
            const auto scores =
                ex::aggregated_scores(ex::rank_table(relation, parse_policy(tie_policy)));
            emit(ex::export_scores_csv(scores, relation.labels()), out_path);
            std::cerr << "standard=" << relation.labels()[ex::standard_object(scores)] << "\n";
            return kExitOk;
        }
        if (network->parsed()) {
            if (net_opts.k == 0 && !net_opts.auto_k && net_opts.graph_path.empty()) {
                std::cerr << "network: one of --k, --auto-k, --graph is required\n";
                return kExitUsage;
            }
            return run_network(ex::load_relation(input, labeled), parse_policy(tie_policy),
                               net_opts, format, out_path);
        }
        if (sweep->parsed()) {
            const auto relation = ex::load_relation(input, labeled);
            const auto ranks = ex::rank_table(relation, parse_policy(tie_policy));
            const auto table = ex::scale_sweep(ex::aggregated_scores(ranks), ranks);
            emit(ex::export_sweep_csv(table), out_path);
            if (!durations_path.empty()) {
                ex::write_file(durations_path,
                               ex::export_durations_csv(table, relation.labels()));
            }
            std::cerr << "k_optimum=" << table.k_optimum
                      << " exemplars=" << table.count_at(table.k_optimum) << "\n";
            return kExitOk;
        }
        if (bootstrap->parsed()) {
            const auto relation = ex::load_relation(input, labeled);
            const auto report = ex::bootstrap_standards(relation, bootstraps, *seed);
            emit(ex::export_bootstrap_json(report, relation.labels()), out_path);
            std::cerr << "mode=" << relation.labels()[report.mode_object]
                      << " frequency=" << report.mode_frequency << "\n";
            return kExitOk;
        }
        if (outliers->parsed()) {
            const auto cloud = ex::load_points(input, labeled);
            ex::OutlierConfig config;
            if (!domain.empty()) config.domain = {domain[0], domain[1], domain[2], domain[3]};
            config.step = step;
            config.cap_percent = cap_percent;
            config.bootstraps = bootstraps;
            config.exclusion = exclusion == "both" ? ex::ExclusionRule::BothCoordinates
                                                   : ex::ExclusionRule::ComplementRectangle;
            const auto report = ex::outlier_experiment(
                cloud,
                mode == "duplicate" ? ex::OutlierMode::Duplicate : ex::OutlierMode::Spread,
                *seed, config);
            std::vector<std::string> labels = cloud.labels;
            if (labels.empty()) {
                for (std::size_t i = 0; i < cloud.size(); ++i) labels.push_back(std::to_string(i));
            }
            emit(ex::export_outlier_json(report, labels), out_path);
            std::cerr << "tolerance_percent=" << report.tolerance_percent << "\n";
            return kExitOk;
        }
        if (euclid->parsed()) {
            const auto relation = ex::euclidean_relation(ex::load_points(input, labeled));
            emit(ex::serialize_relation(relation, labeled), out_path);
            return kExitOk;
        }
        if (hausdorff->parsed()) {
            std::vector<ex::BinaryImage> images;
            for (const auto& path : image_paths) images.push_back(ex::load_pbm(path));
            const auto relation = ex::hausdorff_relation(images);
            emit(ex::serialize_relation(relation, true), out_path);
            return kExitOk;
        }
        if (coauthor->parsed()) {
            const auto result = ex::coauthor_relation(ex::load_publications(input));
            emit(ex::serialize_relation(result.relation, true), out_path);
            if (!affinity_path.empty()) {
                std::string text = "label";
                for (const auto& a : result.authors) text += "," + a;
                text += '\n';
                for (std::size_t i = 0; i < result.authors.size(); ++i) {
                    text += result.authors[i];
                    for (double v : result.affinity[i]) text += "," + ex::format_double(v);
                    text += '\n';
                }
                ex::write_file(affinity_path, text);
            }
            return kExitOk;
        }
    } catch (const ex::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ex::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ex::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
