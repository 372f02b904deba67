#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exemplars/builders.hpp"
#include "exemplars/export.hpp"
#include "exemplars/network.hpp"
#include "exemplars/relation.hpp"
#include "exemplars/robustness.hpp"
#include "exemplars/scoring.hpp"

namespace py = pybind11;
using namespace exemplars;

namespace {

using Matrix = std::vector<std::vector<double>>;

TiePolicy policy_of(bool midrank) {
    return midrank ? TiePolicy::MidRank : TiePolicy::IndexOrder;
}

ScoreVector scores_of(const Matrix& values, bool midrank) {
    return aggregated_scores(rank_table(RelationMatrix::create(values), policy_of(midrank)));
}

}  // namespace

PYBIND11_MODULE(exemplars, m) {
    m.doc() = "Borda-score exemplar extraction from relational datasets";

    m.def(
        "validate",
        [](const Matrix& values) {
            const auto report = validate_relation(values);
            py::list violations;
            for (const auto& v : report.violations) {
                violations.append(py::make_tuple(v.rule, v.row, v.col, v.value));
            }
            py::dict out;
            out["valid"] = report.valid;
            out["violations"] = violations;
            out["is_symmetric"] = report.is_symmetric;
            return out;
        },
        py::arg("values"), "Check the relation rules on a square cost table.");

    m.def(
        "scores",
        [](const Matrix& values, bool midrank) { return scores_of(values, midrank).scores; },
        py::arg("values"), py::arg("midrank") = false,
        "Aggregated Borda score of every object.");

    m.def(
        "standard",
        [](const Matrix& values, bool midrank) {
            return standard_object(scores_of(values, midrank));
        },
        py::arg("values"), py::arg("midrank") = false,
        "Index of the object with the highest aggregated score.");

    m.def(
        "network",
        [](const Matrix& values, std::optional<std::size_t> k,
           std::optional<std::vector<std::vector<std::size_t>>> adjacency, bool midrank) {
            const auto relation = RelationMatrix::create(values);
            const auto ranks = rank_table(relation, policy_of(midrank));
            const auto sv = aggregated_scores(ranks);
            NeighborhoodSpec spec = adjacency ? NeighborhoodSpec::graph(*adjacency)
                                              : NeighborhoodSpec::knn(k.value_or(relation.size()));
            const auto net = build_network(sv, ranks, spec);
            py::dict out;
            out["links"] = net.link;
            out["exemplars"] = net.exemplars;
            out["scores"] = sv.scores;
            return out;
        },
        py::arg("values"), py::arg("k") = py::none(), py::arg("adjacency") = py::none(),
        py::arg("midrank") = false,
        "Link map and exemplars for a k-neighborhood or a fixed adjacency.");

    m.def(
        "sweep",
        [](const Matrix& values, bool midrank) {
            const auto ranks =
                rank_table(RelationMatrix::create(values), policy_of(midrank));
            const auto table = scale_sweep(aggregated_scores(ranks), ranks);
            py::dict out;
            out["exemplar_counts"] = table.exemplar_count;
            out["durations"] = table.duration;
            out["k_optimum"] = table.k_optimum;
            return out;
        },
        py::arg("values"), py::arg("midrank") = false,
        "Exemplar counts E(k), per-object durations, and the optimal scale.");

    m.def(
        "bootstrap",
        [](const Matrix& values, std::size_t bootstraps, std::uint64_t seed) {
            const auto report =
                bootstrap_standards(RelationMatrix::create(values), bootstraps, seed);
            py::dict out;
            out["frequency"] = report.frequency;
            out["mode_object"] = report.mode_object;
            out["mode_frequency"] = report.mode_frequency;
            out["never_selected_fraction"] = report.never_selected_fraction;
            return out;
        },
        py::arg("values"), py::arg("bootstraps"), py::arg("seed"),
        "Frequency of each object as bootstrap standard; deterministic per seed.");

    m.def(
        "euclidean_relation",
        [](const std::vector<std::vector<double>>& points) {
            PointCloud cloud;
            cloud.points = points;
            return euclidean_relation(cloud).rows();
        },
        py::arg("points"), "Pairwise Euclidean distance matrix of a point list.");

    m.def(
        "hausdorff_relation",
        [](const std::vector<std::vector<std::pair<int, int>>>& foregrounds) {
            std::vector<BinaryImage> images;
            for (std::size_t i = 0; i < foregrounds.size(); ++i) {
                BinaryImage img;
                img.label = std::to_string(i);
                img.foreground = foregrounds[i];
                images.push_back(std::move(img));
            }
            return hausdorff_relation(images).rows();
        },
        py::arg("foregrounds"),
        "Directed Hausdorff distance matrix from lists of (row, col) foreground pixels.");

    m.def(
        "coauthor_relation",
        [](const std::vector<std::pair<std::string, std::vector<std::string>>>& publications) {
            std::vector<PublicationRecord> records;
            for (const auto& [id, authors] : publications) {
                records.push_back({id, authors});
            }
            const auto result = coauthor_relation(records);
            py::dict out;
            out["authors"] = result.authors;
            out["costs"] = result.relation.rows();
            out["affinity"] = result.affinity;
            out["adjacency"] = result.adjacency;
            return out;
        },
        py::arg("publications"),
        "Asymmetric co-authorship cost matrix from (id, authors) records.");
}
