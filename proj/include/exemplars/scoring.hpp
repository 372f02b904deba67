#pragma once

#include <cstddef>
#include <vector>

#include "exemplars/relation.hpp"

namespace exemplars {

enum class TiePolicy {
    IndexOrder,  // tied costs ranked by ascending object index; rows are permutations
    MidRank,     // tied cost blocks share the mean of their rank span
};

// Per-voter ranks Rk_x(y). Row x orders all n objects by ascending R(x, .);
// the voter itself always takes rank 1 under both policies. `order` keeps the
// deterministic sorted sequence of each row (cost ascending, self first,
// then object index), which downstream code uses for neighborhoods and
// tie-breaking.
struct RankTable {
    std::size_t n = 0;
    TiePolicy tie_policy = TiePolicy::IndexOrder;
    std::vector<double> ranks;        // ranks[x*n + y] = Rk_x(y), in 1..n
    std::vector<std::size_t> order;   // order[x*n + pos] = object at position pos of row x

    double rank(std::size_t x, std::size_t y) const { return ranks[x * n + y]; }
    std::size_t at(std::size_t x, std::size_t pos) const { return order[x * n + pos]; }
};

RankTable rank_table(const RelationMatrix& relation, TiePolicy policy = TiePolicy::IndexOrder);

// Aggregated Borda scores Sc(x) = (1/n) sum_y (n - Rk_y(x)), self-vote included.
struct ScoreVector {
    std::size_t n = 0;
    std::vector<double> scores;
    std::vector<std::size_t> argmax_set;  // all indices attaining the maximum
};

ScoreVector aggregated_scores(const RankTable& ranks);

// The standard: smallest index attaining the maximal aggregated score.
std::size_t standard_object(const ScoreVector& scores);

}  // namespace exemplars
