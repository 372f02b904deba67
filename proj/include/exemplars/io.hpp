#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "exemplars/builders.hpp"
#include "exemplars/relation.hpp"

namespace exemplars {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

// Relation CSV. Unlabeled: n lines of n decimal values. Labeled: a header
// line "label,<col labels...>" and each row prefixed with its label. Row i
// holds costs from object i to each object j.
RelationMatrix load_relation(const std::filesystem::path& path, bool labeled);
RelationMatrix parse_relation(const std::string& text, bool labeled);

// Parsed but not yet validated, for reporting rule violations in full.
struct RawRelation {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
};
RawRelation parse_relation_raw(const std::string& text, bool labeled);

std::string serialize_relation(const RelationMatrix& relation, bool labeled);
void save_relation(const RelationMatrix& relation, const std::filesystem::path& path,
                   bool labeled);

// Points CSV: one point per line, d comma-separated decimals, optional
// leading label column.
PointCloud load_points(const std::filesystem::path& path, bool labeled);
PointCloud parse_points(const std::string& text, bool labeled);

// Plain-text portable bitmap ("P1"); value-1 pixels are foreground. The
// label is the file stem.
BinaryImage load_pbm(const std::filesystem::path& path);
BinaryImage parse_pbm(const std::string& text, const std::string& label);

// One JSON object per line: {"id": ..., "authors": [...]}.
std::vector<PublicationRecord> load_publications(const std::filesystem::path& path);
std::vector<PublicationRecord> parse_publications(const std::string& text);

// One line per object: "label: neighbor1,neighbor2,...". Returned adjacency
// is indexed consistently with `labels` and never contains the object itself.
std::vector<std::vector<std::size_t>> load_adjacency(const std::filesystem::path& path,
                                                     const std::vector<std::string>& labels);
std::vector<std::vector<std::size_t>> parse_adjacency(const std::string& text,
                                                      const std::vector<std::string>& labels);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace exemplars
