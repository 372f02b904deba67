#include "doctest.h"

#include <string>

#include "exemplars/builders.hpp"
#include "exemplars/export.hpp"
#include "exemplars/io.hpp"
#include "exemplars/network.hpp"
#include "exemplars/scoring.hpp"

#include "fixtures.hpp"

using namespace exemplars;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("score CSV is sorted by descending score") {
    const auto relation = fixtures::six_point_relation();
    const auto sv = aggregated_scores(rank_table(relation));
    const auto csv = export_scores_csv(sv, relation.labels());
    CHECK(csv == "10,3\n2," + format_double(17.0 / 6.0) + "\n1," + format_double(8.0 / 3.0) +
                     "\n11," + format_double(8.0 / 3.0) + "\n0,2\n12," +
                     format_double(11.0 / 6.0) + "\n");
}

TEST_CASE("sweep and duration CSVs for the fixture") {
    const auto relation = fixtures::six_point_relation();
    const auto ranks = rank_table(relation);
    const auto sweep = scale_sweep(aggregated_scores(ranks), ranks);
    CHECK(export_sweep_csv(sweep) == "1,6,6\n2,3,5\n3,2,4\n4,1,3\n5,1,2\n6,1,1\n");
    CHECK(export_durations_csv(sweep, relation.labels()) ==
          "0,1\n1,2\n2,3\n10,6\n11,1\n12,1\n");
}

TEST_CASE("DOT export of the fixture at k=3") {
    const auto relation = fixtures::six_point_relation();
    const auto ranks = rank_table(relation);
    const auto sv = aggregated_scores(ranks);
    const auto net = build_network(sv, ranks, NeighborhoodSpec::knn(3));
    const auto dot = export_dot(net, sv, relation.labels());

    CHECK(count_occurrences(dot, "[label=") == 6);
    CHECK(count_occurrences(dot, "->") == 4);
    CHECK(count_occurrences(dot, "peripheries=2") == 2);
    CHECK(dot.find("\"0\" -> \"2\"") != std::string::npos);
    CHECK(dot.find("\"11\" -> \"10\"") != std::string::npos);
    // byte-stable across runs
    CHECK(dot == export_dot(net, sv, relation.labels()));
}

TEST_CASE("DOT export at k=n is a single tree rooted at the standard") {
    const auto relation = fixtures::six_point_relation();
    const auto ranks = rank_table(relation);
    const auto sv = aggregated_scores(ranks);
    const auto net = build_network(sv, ranks, NeighborhoodSpec::knn(6));
    const auto dot = export_dot(net, sv, relation.labels());
    CHECK(count_occurrences(dot, "peripheries=2") == 1);
    CHECK(count_occurrences(dot, "->") == 5);
}

TEST_CASE("DOT export of a singleton") {
    const auto relation = RelationMatrix::create({{0.0}}, {"only"});
    const auto ranks = rank_table(relation);
    const auto sv = aggregated_scores(ranks);
    const auto net = build_network(sv, ranks, NeighborhoodSpec::knn(1));
    const auto dot = export_dot(net, sv, relation.labels());
    CHECK(count_occurrences(dot, "[label=") == 1);
    CHECK(count_occurrences(dot, "->") == 0);
}

TEST_CASE("JSON report with auto-k sweep") {
    const auto relation = fixtures::six_point_relation();
    const auto ranks = rank_table(relation);
    const auto sv = aggregated_scores(ranks);

    RunReport report;
    report.labels = relation.labels();
    report.scores = sv;
    report.standard = standard_object(sv);
    report.sweep = scale_sweep(sv, ranks);
    report.k = report.sweep->k_optimum;
    report.network = build_network(sv, ranks, NeighborhoodSpec::knn(*report.k));

    const auto text = export_report(report);
    CHECK(text.find("\"schema\": \"exemplars/1\"") != std::string::npos);
    CHECK(text.find("\"standard\": \"10\"") != std::string::npos);
    CHECK(text.find("\"k_optimum\": 2") != std::string::npos);
    CHECK(text.find("\"exemplars\": [\n    \"1\",\n    \"2\",\n    \"10\"\n  ]") !=
          std::string::npos);
    CHECK(text == export_report(report));
}

TEST_CASE("graph-mode report omits every sweep field") {
    const auto relation = fixtures::six_point_relation();
    const auto ranks = rank_table(relation);
    const auto sv = aggregated_scores(ranks);

    std::vector<std::vector<std::size_t>> ring(6);
    for (std::size_t x = 0; x < 6; ++x) ring[x] = {(x + 5) % 6, (x + 1) % 6};

    RunReport report;
    report.labels = relation.labels();
    report.scores = sv;
    report.standard = standard_object(sv);
    report.network = build_network(sv, ranks, NeighborhoodSpec::graph(ring));

    const auto text = export_report(report);
    CHECK(text.find("k_optimum") == std::string::npos);
    CHECK(text.find("durations") == std::string::npos);
    CHECK(text.find("exemplar_counts") == std::string::npos);
    CHECK(text.find("bootstrap") == std::string::npos);
    CHECK(text.find("\"links\"") != std::string::npos);
}
