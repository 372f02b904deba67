#include "exemplars/builders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace exemplars {

RelationMatrix euclidean_relation(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    for (const auto& p : cloud.points) {
        if (p.size() != d) throw ShapeError("points have mixed dimensions");
    }
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = cloud.points[i][c] - cloud.points[j][c];
                sq += diff * diff;
            }
            values[i][j] = values[j][i] = std::sqrt(sq);
        }
    }
    return RelationMatrix::create(std::move(values), cloud.labels);
}

double directed_hausdorff(const BinaryImage& from, const BinaryImage& to) {
    long long worst = 0;  // squared pixel distances are exact in integers
    for (const auto& [ar, ac] : from.foreground) {
        long long nearest = std::numeric_limits<long long>::max();
        for (const auto& [br, bc] : to.foreground) {
            const long long dr = ar - br;
            const long long dc = ac - bc;
            const long long sq = dr * dr + dc * dc;
            if (sq < nearest) {
                nearest = sq;
                if (nearest == 0) break;
            }
        }
        worst = std::max(worst, nearest);
    }
    return std::sqrt(static_cast<double>(worst));
}

RelationMatrix hausdorff_relation(const std::vector<BinaryImage>& images) {
    const std::size_t n = images.size();
    std::vector<std::string> labels;
    for (const auto& img : images) {
        if (img.foreground.empty()) {
            throw ValidationError("image '" + img.label + "' has an empty foreground");
        }
        labels.push_back(img.label);
    }
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) values[i][j] = directed_hausdorff(images[i], images[j]);
        }
    }
    return RelationMatrix::create(std::move(values), std::move(labels));
}

CoauthorRelation coauthor_relation(const std::vector<PublicationRecord>& publications) {
    if (publications.empty()) {
        throw ValidationError("at least one publication record is required");
    }
    // Authors in first-appearance order.
    std::vector<std::string> authors;
    std::map<std::string, std::size_t> index;
    for (const auto& pub : publications) {
        std::set<std::string> in_record;
        for (const auto& name : pub.authors) {
            if (!in_record.insert(name).second) {
                throw ValidationError("publication '" + pub.id + "' lists author '" + name +
                                      "' twice");
            }
            if (index.emplace(name, authors.size()).second) {
                authors.push_back(name);
            }
        }
    }
    const std::size_t n = authors.size();

    std::vector<std::size_t> total_pubs(n, 0);
    for (const auto& pub : publications) {
        for (const auto& name : pub.authors) total_pubs[index.at(name)] += 1;
    }

    std::vector<std::vector<double>> affinity(n, std::vector<double>(n, 0.0));
    std::vector<std::set<std::size_t>> adjacency_sets(n);
    for (const auto& pub : publications) {
        const double weight = static_cast<double>(pub.authors.size());
        for (const auto& a : pub.authors) {
            const std::size_t i = index.at(a);
            for (const auto& b : pub.authors) {
                const std::size_t j = index.at(b);
                if (i == j) continue;
                affinity[i][j] += weight * static_cast<double>(total_pubs[i]);
                adjacency_sets[i].insert(j);
            }
        }
    }

    double max_affinity = 0.0;
    for (const auto& row : affinity) {
        for (double v : row) max_affinity = std::max(max_affinity, v);
    }

    std::vector<std::vector<double>> costs(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            costs[i][j] = adjacency_sets[i].count(j) ? 1.0 + max_affinity - affinity[i][j]
                                                     : 2.0 + max_affinity;
        }
    }

    CoauthorRelation result{RelationMatrix::create(std::move(costs), authors),
                            authors,
                            {},
                            std::move(affinity)};
    result.adjacency.reserve(n);
    for (const auto& s : adjacency_sets) {
        result.adjacency.emplace_back(s.begin(), s.end());
    }
    return result;
}

}  // namespace exemplars
