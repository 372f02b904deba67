#pragma once

#include <string>
#include <vector>

#include "exemplars/builders.hpp"
#include "exemplars/relation.hpp"

namespace fixtures {

// 1-D points {0, 1, 2, 10, 11, 12}: two tight clusters, the canonical
// fixture of the whole test suite. Labels carry the point values.
inline exemplars::PointCloud six_points() {
    exemplars::PointCloud cloud;
    for (double v : {0.0, 1.0, 2.0, 10.0, 11.0, 12.0}) {
        cloud.labels.push_back(std::to_string(static_cast<int>(v)));
        cloud.points.push_back({v});
    }
    return cloud;
}

inline exemplars::RelationMatrix six_point_relation() {
    return exemplars::euclidean_relation(six_points());
}

inline exemplars::PointCloud three_points() {
    exemplars::PointCloud cloud;
    for (double v : {0.0, 1.0, 3.0}) {
        cloud.labels.push_back(std::to_string(static_cast<int>(v)));
        cloud.points.push_back({v});
    }
    return cloud;
}

}  // namespace fixtures
