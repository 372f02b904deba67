#include "exemplars/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exemplars/rng.hpp"
#include "exemplars/scoring.hpp"

namespace exemplars {

namespace {

// Standard of one resample, reported as an original index. Ties on cost are
// resolved by (original index, draw position), which makes duplicates of the
// same original interchangeable; ties on score resolve the same way.
std::size_t resample_standard(const RelationMatrix& relation,
                              const std::vector<std::size_t>& draw) {
    const std::size_t n = draw.size();
    std::vector<double> received(n, 0.0);
    std::vector<std::size_t> row(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::iota(row.begin(), row.end(), std::size_t{0});
        const std::size_t from = draw[a];
        std::sort(row.begin(), row.end(), [&](std::size_t p, std::size_t q) {
            const double cp = relation(from, draw[p]);
            const double cq = relation(from, draw[q]);
            if (cp != cq) return cp < cq;
            if (draw[p] != draw[q]) return draw[p] < draw[q];
            return p < q;
        });
        for (std::size_t pos = 0; pos < n; ++pos) {
            received[row[pos]] += static_cast<double>(n - (pos + 1));
        }
    }
    std::size_t winner = 0;
    for (std::size_t p = 1; p < n; ++p) {
        if (received[p] > received[winner] ||
            (received[p] == received[winner] &&
             (draw[p] < draw[winner] || (draw[p] == draw[winner] && p < winner)))) {
            winner = p;
        }
    }
    return draw[winner];
}

}  // namespace

BootstrapReport bootstrap_standards(const RelationMatrix& relation, std::size_t bootstraps,
                                    std::uint64_t seed) {
    const std::size_t n = relation.size();
    BootstrapReport report;
    report.bootstraps = bootstraps;
    report.seed = seed;

    SplitMix64 gen(seed);
    std::vector<std::size_t> counts(n, 0);
    std::vector<std::size_t> draw(n);
    for (std::size_t round = 0; round < bootstraps; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            draw[i] = static_cast<std::size_t>(gen.next_below(n));
        }
        counts[resample_standard(relation, draw)] += 1;
    }

    report.frequency.resize(n);
    std::size_t never = 0;
    for (std::size_t x = 0; x < n; ++x) {
        report.frequency[x] =
            static_cast<double>(counts[x]) / static_cast<double>(bootstraps);
        if (counts[x] == 0) ++never;
    }
    report.mode_object = static_cast<std::size_t>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
    report.mode_frequency = report.frequency[report.mode_object];
    report.never_selected_fraction = static_cast<double>(never) / static_cast<double>(n);
    return report;
}

namespace {

bool accepted_outlier(double x, double y, const Rect& exclusion, ExclusionRule rule) {
    if (rule == ExclusionRule::ComplementRectangle) {
        return !exclusion.contains(x, y);
    }
    const bool x_out = x <= exclusion.x_lo || x >= exclusion.x_hi;
    const bool y_out = y <= exclusion.y_lo || y >= exclusion.y_hi;
    return x_out && y_out;
}

std::vector<double> sample_outlier(SplitMix64& gen, const OutlierConfig& config) {
    const Rect domain = config.domain.scaled(config.outlier_scale);
    const Rect exclusion = config.domain.scaled(config.exclusion_scale);
    for (;;) {
        const double x = gen.next_in(domain.x_lo, domain.x_hi);
        const double y = gen.next_in(domain.y_lo, domain.y_hi);
        if (accepted_outlier(x, y, exclusion, config.exclusion)) return {x, y};
    }
}

std::size_t standard_of_points(const PointCloud& cloud) {
    const auto relation = euclidean_relation(cloud);
    const auto ranks = rank_table(relation, TiePolicy::IndexOrder);
    return standard_object(aggregated_scores(ranks));
}

}  // namespace

OutlierReport outlier_experiment(const PointCloud& points, OutlierMode mode, std::uint64_t seed,
                                 const OutlierConfig& config) {
    if (points.dim() != 2) {
        throw ShapeError("the outlier protocol is defined for 2-D point clouds only");
    }
    const std::size_t n = points.size();

    OutlierReport report;
    report.mode = mode;
    report.seed = seed;

    SplitMix64 gen(seed);
    const auto clean = euclidean_relation(points);
    const auto bootstrap = bootstrap_standards(clean, config.bootstraps, gen.next());

    // Top-3 most frequent clean standards, frozen for the whole experiment.
    std::vector<std::size_t> by_count(n);
    std::iota(by_count.begin(), by_count.end(), std::size_t{0});
    std::sort(by_count.begin(), by_count.end(), [&](std::size_t a, std::size_t b) {
        if (bootstrap.frequency[a] != bootstrap.frequency[b]) {
            return bootstrap.frequency[a] > bootstrap.frequency[b];
        }
        return a < b;
    });
    for (std::size_t i = 0; i < std::min<std::size_t>(3, n); ++i) {
        if (bootstrap.frequency[by_count[i]] > 0.0) report.initial_top3.push_back(by_count[i]);
    }

    PointCloud augmented = points;
    const bool labeled = !points.labels.empty();
    std::vector<double> duplicate_point;
    if (mode == OutlierMode::Duplicate) duplicate_point = sample_outlier(gen, config);

    const std::size_t step =
        config.step > 0 ? config.step : (n + 99) / 100;  // default 1% of n, rounded up
    const std::size_t cap = static_cast<std::size_t>(
        std::ceil(config.cap_percent / 100.0 * static_cast<double>(n)));

    std::size_t added = 0;
    while (added < cap) {
        const std::size_t batch = std::min(step, cap - added);
        for (std::size_t i = 0; i < batch; ++i) {
            augmented.points.push_back(mode == OutlierMode::Duplicate
                                           ? duplicate_point
                                           : sample_outlier(gen, config));
            if (labeled) {
                augmented.labels.push_back("outlier" + std::to_string(added + i + 1));
            }
        }
        added += batch;

        OutlierStep entry;
        entry.outlier_count = added;
        entry.standard = standard_of_points(augmented);
        entry.in_top3 = entry.standard < n &&
                        std::find(report.initial_top3.begin(), report.initial_top3.end(),
                                  entry.standard) != report.initial_top3.end();
        report.trajectory.push_back(entry);
        if (!entry.in_top3) break;
        report.tolerance_percent = 100.0 * static_cast<double>(added) / static_cast<double>(n);
    }
    return report;
}

}  // namespace exemplars
