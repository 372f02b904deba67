#pragma once

#include <cstddef>
#include <vector>

#include "exemplars/scoring.hpp"

namespace exemplars {

// How each object's neighborhood is obtained: the k objects it ranks closest
// (always including itself, which holds rank 1), or a fixed adjacency taken
// from the dataset (self added implicitly).
struct NeighborhoodSpec {
    enum class Mode { Knn, Graph };

    Mode mode = Mode::Knn;
    std::size_t k = 1;
    std::vector<std::vector<std::size_t>> adjacency;  // graph mode; never contains self

    static NeighborhoodSpec knn(std::size_t k) {
        NeighborhoodSpec spec;
        spec.mode = Mode::Knn;
        spec.k = k;
        return spec;
    }
    static NeighborhoodSpec graph(std::vector<std::vector<std::size_t>> adjacency) {
        NeighborhoodSpec spec;
        spec.mode = Mode::Graph;
        spec.adjacency = std::move(adjacency);
        return spec;
    }
};

// N(x): ascending object indices. Knn mode returns exactly the k objects with
// Rk_x(y) <= k; graph mode returns {x} plus the adjacency of x.
std::vector<std::size_t> neighborhood(const RankTable& ranks, std::size_t x,
                                      const NeighborhoodSpec& spec);

// link[x] is the best-scoring member of N(x); self-linked objects are the
// exemplars. Non-self links strictly increase the score, so following the
// link map always terminates at an exemplar and the network is a forest.
struct ExemplarNetwork {
    std::vector<std::size_t> link;
    std::vector<std::size_t> exemplars;  // ascending
    NeighborhoodSpec spec;
    ScoreVector scores;
};

ExemplarNetwork build_network(const ScoreVector& scores, const RankTable& ranks,
                              const NeighborhoodSpec& spec);

// Exemplar survival across every scale k = 1..n. Exemplar sets are nested as
// k grows, so they are fully described by each object's duration (the largest
// k at which it is still an exemplar).
struct SweepTable {
    std::size_t n = 0;
    std::vector<std::size_t> exemplar_count;  // exemplar_count[k-1] = E(k)
    std::vector<std::size_t> duration;        // per object, in 1..n
    std::size_t k_optimum = 1;

    std::size_t count_at(std::size_t k) const { return exemplar_count[k - 1]; }
    std::vector<std::size_t> exemplars_at(std::size_t k) const;
};

// Knn mode only; graph neighborhoods have no scale parameter.
SweepTable scale_sweep(const ScoreVector& scores, const RankTable& ranks);

// Smallest k maximizing (n - k + 1) - E(k).
std::size_t optimal_k(const SweepTable& sweep, std::size_t n);

}  // namespace exemplars
