#include "exemplars/scoring.hpp"

#include <algorithm>
#include <numeric>

namespace exemplars {

RankTable rank_table(const RelationMatrix& relation, TiePolicy policy) {
    const std::size_t n = relation.size();
    RankTable table;
    table.n = n;
    table.tie_policy = policy;
    table.ranks.assign(n * n, 0.0);
    table.order.assign(n * n, 0);

    std::vector<std::size_t> row(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::iota(row.begin(), row.end(), std::size_t{0});
        std::sort(row.begin(), row.end(), [&](std::size_t a, std::size_t b) {
            const double ca = relation(x, a);
            const double cb = relation(x, b);
            if (ca != cb) return ca < cb;
            if ((a == x) != (b == x)) return a == x;  // the voter wins any tie
            return a < b;
        });
        std::copy(row.begin(), row.end(), table.order.begin() + static_cast<std::ptrdiff_t>(x * n));

        if (policy == TiePolicy::IndexOrder) {
            for (std::size_t pos = 0; pos < n; ++pos) {
                table.ranks[x * n + row[pos]] = static_cast<double>(pos + 1);
            }
        } else {
            // Mid-rank: blocks of equal cost share the mean of their rank
            // span. The voter sits alone at rank 1; a cost-zero block after
            // it spans from rank 2.
            table.ranks[x * n + row[0]] = 1.0;
            std::size_t pos = 1;
            while (pos < n) {
                std::size_t end = pos + 1;
                while (end < n && relation(x, row[end]) == relation(x, row[pos])) ++end;
                const double mid = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
                for (std::size_t p = pos; p < end; ++p) {
                    table.ranks[x * n + row[p]] = mid;
                }
                pos = end;
            }
        }
    }
    return table;
}

ScoreVector aggregated_scores(const RankTable& ranks) {
    const std::size_t n = ranks.n;
    ScoreVector sv;
    sv.n = n;
    sv.scores.assign(n, 0.0);
    // Sum the n relative scores of each object before the single division,
    // so the result is independent of evaluation order.
    for (std::size_t x = 0; x < n; ++x) {
        double received = 0.0;
        for (std::size_t voter = 0; voter < n; ++voter) {
            received += static_cast<double>(n) - ranks.rank(voter, x);
        }
        sv.scores[x] = received / static_cast<double>(n);
    }
    if (n > 0) {
        const double best = *std::max_element(sv.scores.begin(), sv.scores.end());
        for (std::size_t x = 0; x < n; ++x) {
            if (sv.scores[x] == best) sv.argmax_set.push_back(x);
        }
    }
    return sv;
}

std::size_t standard_object(const ScoreVector& scores) {
    return scores.argmax_set.front();
}

}  // namespace exemplars
