#include "exemplars/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace exemplars {

std::vector<std::size_t> neighborhood(const RankTable& ranks, std::size_t x,
                                      const NeighborhoodSpec& spec) {
    std::vector<std::size_t> members;
    if (spec.mode == NeighborhoodSpec::Mode::Knn) {
        if (spec.k < 1 || spec.k > ranks.n) {
            throw std::out_of_range("scale factor k must be in 1..n");
        }
        members.assign(ranks.order.begin() + static_cast<std::ptrdiff_t>(x * ranks.n),
                       ranks.order.begin() + static_cast<std::ptrdiff_t>(x * ranks.n + spec.k));
    } else {
        members = spec.adjacency[x];
        members.push_back(x);
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace {

// argmax of the score over the neighborhood; score ties go to the candidate
// ranked closest to x, and x itself holds rank 1, so x wins any tie it is in.
std::size_t best_neighbor(const ScoreVector& scores, const RankTable& ranks, std::size_t x,
                          const std::vector<std::size_t>& members) {
    std::size_t best = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
        const std::size_t candidate = members[i];
        const double sc = scores.scores[candidate];
        const double sb = scores.scores[best];
        if (sc > sb ||
            (sc == sb && ranks.rank(x, candidate) < ranks.rank(x, best))) {
            best = candidate;
        }
    }
    return best;
}

}  // namespace

ExemplarNetwork build_network(const ScoreVector& scores, const RankTable& ranks,
                              const NeighborhoodSpec& spec) {
    const std::size_t n = ranks.n;
    ExemplarNetwork net;
    net.spec = spec;
    net.scores = scores;
    net.link.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        net.link[x] = best_neighbor(scores, ranks, x, neighborhood(ranks, x, spec));
        if (net.link[x] == x) net.exemplars.push_back(x);
    }
    return net;
}

SweepTable scale_sweep(const ScoreVector& scores, const RankTable& ranks) {
    const std::size_t n = ranks.n;
    SweepTable sweep;
    sweep.n = n;
    sweep.duration.assign(n, n);
    // x is an exemplar at scale k iff no object among its k nearest has a
    // strictly higher score, so its duration is the position of the first
    // higher-scoring object along its rank row.
    for (std::size_t x = 0; x < n; ++x) {
        const double own = scores.scores[x];
        for (std::size_t pos = 1; pos < n; ++pos) {
            if (scores.scores[ranks.at(x, pos)] > own) {
                sweep.duration[x] = pos;
                break;
            }
        }
    }
    sweep.exemplar_count.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        sweep.exemplar_count[sweep.duration[x] - 1] += 1;
    }
    // suffix sum: E(k) = #{x : duration(x) >= k}
    for (std::size_t k = n > 0 ? n - 1 : 0; k-- > 0;) {
        sweep.exemplar_count[k] += sweep.exemplar_count[k + 1];
    }
    sweep.k_optimum = optimal_k(sweep, n);
    return sweep;
}

std::vector<std::size_t> SweepTable::exemplars_at(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) {
        if (duration[x] >= k) out.push_back(x);
    }
    return out;
}

std::size_t optimal_k(const SweepTable& sweep, std::size_t n) {
    std::size_t best_k = 1;
    std::ptrdiff_t best_diff = -1;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::ptrdiff_t diff = static_cast<std::ptrdiff_t>(n - k + 1) -
                                    static_cast<std::ptrdiff_t>(sweep.count_at(k));
        if (diff > best_diff) {
            best_diff = diff;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace exemplars
