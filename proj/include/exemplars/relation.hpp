#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exemplars {

// Raised when an input table is not even rectangular (distinct from rule
// violations, which are reported through ValidationReport).
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a table fails the relation rules or labels are unusable.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string rule;  // "square", "positive", "zero-diagonal", "finite"
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
    bool is_symmetric = false;  // informational, never a violation
};

// Checks the three relation rules on a raw table: every entry finite and
// non-negative, zero diagonal, square shape. Throws ShapeError if the rows
// have unequal lengths.
ValidationReport validate_relation(const std::vector<std::vector<double>>& values);

// The total, positive, zero-diagonal pairwise cost table R(x, y).
// Symmetry and triangle inequality are not required. Immutable once built.
class RelationMatrix {
public:
    // Validates and takes ownership; throws ValidationError on any rule
    // violation or duplicate label. Empty labels default to "0", "1", ...
    static RelationMatrix create(std::vector<std::vector<double>> values,
                                 std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& data() const { return values_; }
    bool is_symmetric() const { return symmetric_; }

    std::vector<std::vector<double>> rows() const;

private:
    RelationMatrix() = default;
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> values_;  // row-major, values_[i*n+j] = R(i, j)
    bool symmetric_ = false;
};

}  // namespace exemplars
