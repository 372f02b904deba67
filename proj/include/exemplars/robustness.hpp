#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exemplars/builders.hpp"
#include "exemplars/relation.hpp"

namespace exemplars {

struct BootstrapReport {
    std::size_t bootstraps = 0;
    std::uint64_t seed = 0;
    std::vector<double> frequency;  // per original object; sums to 1
    std::size_t mode_object = 0;
    double mode_frequency = 0.0;
    double never_selected_fraction = 0.0;
};

// B rounds of resampling n objects with replacement; each round records the
// original index of the resample's standard. Deterministic given (R, B, seed):
// rounds run in order and each round draws its n indices in order.
BootstrapReport bootstrap_standards(const RelationMatrix& relation, std::size_t bootstraps,
                                    std::uint64_t seed);

enum class OutlierMode { Spread, Duplicate };

// How a candidate outlier is tested against the scaled-up exclusion zone:
// outside the exclusion rectangle entirely, or outside on both coordinates.
enum class ExclusionRule { ComplementRectangle, BothCoordinates };

struct Rect {
    double x_lo, x_hi, y_lo, y_hi;

    Rect scaled(double factor) const {
        return {x_lo * factor, x_hi * factor, y_lo * factor, y_hi * factor};
    }
    bool contains(double x, double y) const {
        return x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi;
    }
};

struct OutlierConfig {
    Rect domain{-10.0, 40.0, -15.0, 15.0};
    double outlier_scale = 1000.0;    // outliers drawn from domain scaled by this
    double exclusion_scale = 100.0;   // ... but kept away from domain scaled by this
    ExclusionRule exclusion = ExclusionRule::ComplementRectangle;
    std::size_t step = 0;             // outliers added per batch; 0 = ceil(n/100)
    double cap_percent = 300.0;       // stop once outlier mass reaches this % of n
    std::size_t bootstraps = 200;     // for the clean dataset's top-3 reference
};

struct OutlierStep {
    std::size_t outlier_count = 0;
    std::size_t standard = 0;  // index into the augmented set; < n means original
    bool in_top3 = false;
};

struct OutlierReport {
    OutlierMode mode = OutlierMode::Spread;
    std::uint64_t seed = 0;
    std::vector<std::size_t> initial_top3;  // up to three most frequent clean standards
    double tolerance_percent = 0.0;
    std::vector<OutlierStep> trajectory;
};

// Adds out-of-range elements to a 2-D point cloud in batches, re-extracting
// the standard after each batch, until it leaves the clean dataset's top-3
// most frequent bootstrap standards or the cap is reached.
OutlierReport outlier_experiment(const PointCloud& points, OutlierMode mode, std::uint64_t seed,
                                 const OutlierConfig& config = {});

}  // namespace exemplars
