#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exemplars/network.hpp"
#include "exemplars/robustness.hpp"
#include "exemplars/scoring.hpp"

namespace exemplars {

// All export functions produce byte-stable text: fixed ordering rules and
// shortest round-trip decimals, so identical inputs give identical bytes.

// "label,score" lines sorted by descending score (ties by object index).
std::string export_scores_csv(const ScoreVector& scores, const std::vector<std::string>& labels);

// "k,E(k),n-k+1" lines for k = 1..n.
std::string export_sweep_csv(const SweepTable& sweep);

// "label,duration" lines in object order.
std::string export_durations_csv(const SweepTable& sweep, const std::vector<std::string>& labels);

// Directed DOT graph: one node per object (label order) carrying its score
// and a width proportional to it, exemplars drawn with a double periphery,
// one edge per non-self link.
std::string export_dot(const ExemplarNetwork& network, const ScoreVector& scores,
                       const std::vector<std::string>& labels);

std::string export_bootstrap_json(const BootstrapReport& report,
                                  const std::vector<std::string>& labels);
std::string export_outlier_json(const OutlierReport& report,
                                const std::vector<std::string>& labels);

// Everything a pipeline run produced, for the single JSON report.
struct RunReport {
    std::vector<std::string> labels;
    ScoreVector scores;
    std::size_t standard = 0;
    std::optional<ExemplarNetwork> network;
    std::optional<std::size_t> k;  // scale factor actually used (knn mode)
    std::optional<SweepTable> sweep;
    std::optional<BootstrapReport> bootstrap;
    std::optional<OutlierReport> outliers;
};

std::string export_report(const RunReport& report);

}  // namespace exemplars
