#include "exemplars/relation.hpp"

#include <cmath>
#include <set>

namespace exemplars {

ValidationReport validate_relation(const std::vector<std::vector<double>>& values) {
    const std::size_t rows = values.size();
    std::size_t cols = rows == 0 ? 0 : values[0].size();
    for (const auto& row : values) {
        if (row.size() != cols) {
            throw ShapeError("non-rectangular table: rows have unequal lengths");
        }
    }

    ValidationReport report;
    if (rows != cols) {
        report.violations.push_back({"square", rows, cols, 0.0});
    }
    const std::size_t n = rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double v = values[i][j];
            if (!std::isfinite(v)) {
                report.violations.push_back({"finite", i, j, v});
            } else if (v < 0.0) {
                report.violations.push_back({"positive", i, j, v});
            } else if (i == j && v != 0.0) {
                report.violations.push_back({"zero-diagonal", i, j, v});
            }
        }
    }
    report.valid = report.violations.empty();

    report.is_symmetric = rows == cols;
    if (report.is_symmetric) {
        for (std::size_t i = 0; i < n && report.is_symmetric; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (values[i][j] != values[j][i]) {
                    report.is_symmetric = false;
                    break;
                }
            }
        }
    }
    return report;
}

RelationMatrix RelationMatrix::create(std::vector<std::vector<double>> values,
                                      std::vector<std::string> labels) {
    auto report = validate_relation(values);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw ValidationError("relation rule '" + v.rule + "' violated at (" +
                              std::to_string(v.row) + ", " + std::to_string(v.col) +
                              ")" + (report.violations.size() > 1
                                         ? " and " + std::to_string(report.violations.size() - 1) +
                                               " more"
                                         : ""));
    }
    const std::size_t n = values.size();
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) {
        throw ValidationError("label count does not match matrix size");
    }
    std::set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw ValidationError("duplicate label: " + label);
        }
    }

    RelationMatrix m;
    m.n_ = n;
    m.labels_ = std::move(labels);
    m.symmetric_ = report.is_symmetric;
    m.values_.reserve(n * n);
    for (const auto& row : values) {
        m.values_.insert(m.values_.end(), row.begin(), row.end());
    }
    return m;
}

std::vector<std::vector<double>> RelationMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(values_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

}  // namespace exemplars
