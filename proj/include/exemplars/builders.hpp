#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "exemplars/relation.hpp"

namespace exemplars {

struct PointCloud {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

struct BinaryImage {
    std::string label;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::pair<int, int>> foreground;  // (row, column) of value-1 pixels
};

struct PublicationRecord {
    std::string id;
    std::vector<std::string> authors;
};

// Co-authorship relation: costs are the reflection of a collaboration
// affinity, so stronger collaboration means lower cost. Non-coauthor pairs
// get a sentinel cost above every real one, keeping the relation total.
struct CoauthorRelation {
    RelationMatrix relation;
    std::vector<std::string> authors;                 // row/column order
    std::vector<std::vector<std::size_t>> adjacency;  // coauthors, ascending, no self
    std::vector<std::vector<double>> affinity;        // raw pre-cost values
};

// R(i, j) = Euclidean distance between points i and j.
RelationMatrix euclidean_relation(const PointCloud& cloud);

// Directed Hausdorff: R(A, B) = max over pixels a of A of the min Euclidean
// pixel distance from a to the foreground of B. Exact nested min/max, no
// distance-transform approximation.
RelationMatrix hausdorff_relation(const std::vector<BinaryImage>& images);
double directed_hausdorff(const BinaryImage& from, const BinaryImage& to);

// affinity(a -> b) = sum over shared publications p of |authors(p)| times the
// total publication count of a. cost(a -> b) = 1 + maxAffinity - affinity for
// coauthor pairs, 2 + maxAffinity otherwise, 0 on the diagonal.
CoauthorRelation coauthor_relation(const std::vector<PublicationRecord>& publications);

}  // namespace exemplars
