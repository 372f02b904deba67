#include "exemplars/export.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"

#include "exemplars/io.hpp"

namespace exemplars {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::size_t> by_descending_score(const ScoreVector& scores) {
    std::vector<std::size_t> order(scores.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores.scores[a] > scores.scores[b];
    });
    return order;
}

std::string quote(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string outlier_label(std::size_t index, std::size_t n,
                          const std::vector<std::string>& labels) {
    if (index < n) return labels[index];
    return "outlier" + std::to_string(index - n + 1);
}

ordered_json bootstrap_json(const BootstrapReport& report,
                            const std::vector<std::string>& labels) {
    ordered_json doc;
    doc["bootstraps"] = report.bootstraps;
    doc["seed"] = report.seed;
    doc["mode_object"] = labels[report.mode_object];
    doc["mode_frequency"] = report.mode_frequency;
    doc["never_selected_fraction"] = report.never_selected_fraction;

    std::vector<std::size_t> order(report.frequency.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.frequency[a] > report.frequency[b];
    });
    ordered_json freq = ordered_json::object();
    for (std::size_t x : order) freq[labels[x]] = report.frequency[x];
    doc["frequency"] = std::move(freq);
    return doc;
}

ordered_json outlier_json(const OutlierReport& report, const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    ordered_json doc;
    doc["mode"] = report.mode == OutlierMode::Spread ? "spread" : "duplicate";
    doc["seed"] = report.seed;
    ordered_json top3 = ordered_json::array();
    for (std::size_t x : report.initial_top3) top3.push_back(labels[x]);
    doc["initial_top3"] = std::move(top3);
    doc["tolerance_percent"] = report.tolerance_percent;
    ordered_json steps = ordered_json::array();
    for (const auto& step : report.trajectory) {
        ordered_json entry;
        entry["outliers"] = step.outlier_count;
        entry["standard"] = outlier_label(step.standard, n, labels);
        entry["in_top3"] = step.in_top3;
        steps.push_back(std::move(entry));
    }
    doc["trajectory"] = std::move(steps);
    return doc;
}

}  // namespace

std::string export_scores_csv(const ScoreVector& scores, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t x : by_descending_score(scores)) {
        out += labels[x];
        out += ',';
        out += format_double(scores.scores[x]);
        out += '\n';
    }
    return out;
}

std::string export_sweep_csv(const SweepTable& sweep) {
    std::string out;
    for (std::size_t k = 1; k <= sweep.n; ++k) {
        out += std::to_string(k);
        out += ',';
        out += std::to_string(sweep.count_at(k));
        out += ',';
        out += std::to_string(sweep.n - k + 1);
        out += '\n';
    }
    return out;
}

std::string export_durations_csv(const SweepTable& sweep,
                                 const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t x = 0; x < sweep.n; ++x) {
        out += labels[x];
        out += ',';
        out += std::to_string(sweep.duration[x]);
        out += '\n';
    }
    return out;
}

std::string export_dot(const ExemplarNetwork& network, const ScoreVector& scores,
                       const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    std::string out = "digraph exemplars {\n";
    for (std::size_t x : order) {
        const double relative = n > 1 ? scores.scores[x] / static_cast<double>(n - 1) : 1.0;
        char width[32];
        std::snprintf(width, sizeof(width), "%.3f", 0.5 + relative);
        out += "  " + quote(labels[x]) + " [label=" + quote(labels[x]) +
               ", score=" + format_double(scores.scores[x]) + ", width=" + width;
        if (network.link[x] == x) out += ", peripheries=2";
        out += "];\n";
    }
    for (std::size_t x : order) {
        if (network.link[x] != x) {
            out += "  " + quote(labels[x]) + " -> " + quote(labels[network.link[x]]) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string export_bootstrap_json(const BootstrapReport& report,
                                  const std::vector<std::string>& labels) {
    ordered_json doc;
    doc["schema"] = "exemplars/1";
    doc.update(bootstrap_json(report, labels));
    return doc.dump(2) + "\n";
}

std::string export_outlier_json(const OutlierReport& report,
                                const std::vector<std::string>& labels) {
    ordered_json doc;
    doc["schema"] = "exemplars/1";
    doc.update(outlier_json(report, labels));
    return doc.dump(2) + "\n";
}

std::string export_report(const RunReport& report) {
    const auto& labels = report.labels;
    ordered_json doc;
    doc["schema"] = "exemplars/1";
    doc["labels"] = labels;
    doc["scores"] = report.scores.scores;
    doc["standard"] = labels[report.standard];
    if (report.k) doc["k"] = *report.k;
    if (report.sweep) doc["k_optimum"] = report.sweep->k_optimum;
    if (report.network) {
        ordered_json links = ordered_json::object();
        for (std::size_t x = 0; x < labels.size(); ++x) {
            links[labels[x]] = labels[report.network->link[x]];
        }
        doc["links"] = std::move(links);
        ordered_json exemplars = ordered_json::array();
        for (std::size_t x : report.network->exemplars) exemplars.push_back(labels[x]);
        doc["exemplars"] = std::move(exemplars);
    }
    if (report.sweep) {
        ordered_json counts = ordered_json::array();
        for (std::size_t k = 1; k <= report.sweep->n; ++k) {
            counts.push_back(report.sweep->count_at(k));
        }
        doc["exemplar_counts"] = std::move(counts);
        ordered_json durations = ordered_json::object();
        for (std::size_t x = 0; x < labels.size(); ++x) {
            durations[labels[x]] = report.sweep->duration[x];
        }
        doc["durations"] = std::move(durations);
    }
    if (report.bootstrap) doc["bootstrap"] = bootstrap_json(*report.bootstrap, labels);
    if (report.outliers) doc["outliers"] = outlier_json(*report.outliers, labels);
    return doc.dump(2) + "\n";
}

}  // namespace exemplars
