#include "exemplars/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace exemplars {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t pos = text.find('\n', start);
        if (pos == std::string::npos) pos = text.size();
        std::string line = text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = pos + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& cell, std::size_t line_no) {
    const std::string t = trim(cell);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path.string());
    out << content;
}

RawRelation parse_relation_raw(const std::string& text, bool labeled) {
    const auto lines = lines_of(text);
    if (lines.empty()) throw ParseError("empty relation file");

    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
    std::size_t first_row = 0;
    if (labeled) {
        const auto header = split(lines[0], ',');
        if (header.size() < 2 || header[0] != "label") {
            throw ParseError("labeled relation must start with a 'label' header line");
        }
        labels.assign(header.begin() + 1, header.end());
        first_row = 1;
    }

    const std::size_t n = lines.size() - first_row;
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t line_no = first_row + r + 1;
        auto cells = split(lines[first_row + r], ',');
        if (labeled) {
            if (cells.empty() || r >= labels.size() || cells[0] != labels[r]) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": row label does not match column header order");
            }
            cells.erase(cells.begin());
        }
        if (cells.size() != n) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " values, got " + std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(n);
        for (const auto& cell : cells) row.push_back(parse_number(cell, line_no));
        values.push_back(std::move(row));
    }
    if (labeled && labels.size() != n) {
        throw ParseError("header names " + std::to_string(labels.size()) + " columns but " +
                         std::to_string(n) + " rows follow");
    }
    return {std::move(labels), std::move(values)};
}

RelationMatrix parse_relation(const std::string& text, bool labeled) {
    auto raw = parse_relation_raw(text, labeled);
    return RelationMatrix::create(std::move(raw.values), std::move(raw.labels));
}

RelationMatrix load_relation(const std::filesystem::path& path, bool labeled) {
    return parse_relation(read_file(path), labeled);
}

std::string serialize_relation(const RelationMatrix& relation, bool labeled) {
    const std::size_t n = relation.size();
    std::string out;
    if (labeled) {
        out += "label";
        for (const auto& label : relation.labels()) {
            out += ',';
            out += label;
        }
        out += '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (labeled) out += relation.labels()[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (labeled || j > 0) out += ',';
            out += format_double(relation(i, j));
        }
        out += '\n';
    }
    return out;
}

void save_relation(const RelationMatrix& relation, const std::filesystem::path& path,
                   bool labeled) {
    write_file(path, serialize_relation(relation, labeled));
}

PointCloud parse_points(const std::string& text, bool labeled) {
    PointCloud cloud;
    const auto lines = lines_of(text);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        auto cells = split(lines[r], ',');
        if (labeled) {
            if (cells.size() < 2) {
                throw ParseError("line " + std::to_string(r + 1) +
                                 ": expected a label and at least one coordinate");
            }
            cloud.labels.push_back(trim(cells[0]));
            cells.erase(cells.begin());
        }
        std::vector<double> point;
        point.reserve(cells.size());
        for (const auto& cell : cells) point.push_back(parse_number(cell, r + 1));
        if (!cloud.points.empty() && point.size() != cloud.points.front().size()) {
            throw ParseError("line " + std::to_string(r + 1) + ": dimension mismatch");
        }
        cloud.points.push_back(std::move(point));
    }
    return cloud;
}

PointCloud load_points(const std::filesystem::path& path, bool labeled) {
    return parse_points(read_file(path), labeled);
}

BinaryImage parse_pbm(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    std::string token;

    // whitespace-delimited tokens; '#' starts a comment until end of line
    auto next_token = [&]() -> std::string {
        std::string t;
        while (in >> t) {
            if (t[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return t;
        }
        throw ParseError("image '" + label + "': truncated PBM file");
    };

    if (next_token() != "P1") {
        throw ParseError("image '" + label + "': expected magic 'P1'");
    }
    const long width = std::stol(next_token());
    const long height = std::stol(next_token());
    if (width <= 0 || height <= 0) {
        throw ParseError("image '" + label + "': invalid dimensions");
    }

    BinaryImage img;
    img.label = label;
    img.width = static_cast<std::size_t>(width);
    img.height = static_cast<std::size_t>(height);
    long count = 0;
    while (count < width * height) {
        const std::string t = next_token();
        for (char c : t) {
            if (c != '0' && c != '1') {
                throw ParseError("image '" + label + "': unexpected pixel character '" +
                                 std::string(1, c) + "'");
            }
            if (count >= width * height) {
                throw ParseError("image '" + label + "': too many pixels");
            }
            if (c == '1') {
                img.foreground.emplace_back(static_cast<int>(count / width),
                                            static_cast<int>(count % width));
            }
            ++count;
        }
    }
    return img;
}

BinaryImage load_pbm(const std::filesystem::path& path) {
    return parse_pbm(read_file(path), path.stem().string());
}

std::vector<PublicationRecord> parse_publications(const std::string& text) {
    std::vector<PublicationRecord> records;
    const auto lines = lines_of(text);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(lines[r]);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("line " + std::to_string(r + 1) + ": " + e.what());
        }
        if (!doc.is_object() || !doc.contains("id") || !doc.contains("authors") ||
            !doc["authors"].is_array() || doc["authors"].empty()) {
            throw ParseError("line " + std::to_string(r + 1) +
                             ": expected {\"id\": ..., \"authors\": [...]} with >= 1 author");
        }
        PublicationRecord rec;
        rec.id = doc["id"].is_string() ? doc["id"].get<std::string>() : doc["id"].dump();
        for (const auto& a : doc["authors"]) {
            if (!a.is_string()) {
                throw ParseError("line " + std::to_string(r + 1) + ": authors must be strings");
            }
            rec.authors.push_back(a.get<std::string>());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<PublicationRecord> load_publications(const std::filesystem::path& path) {
    return parse_publications(read_file(path));
}

std::vector<std::vector<std::size_t>> parse_adjacency(const std::string& text,
                                                      const std::vector<std::string>& labels) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<std::vector<std::size_t>> adjacency(labels.size());
    const auto lines = lines_of(text);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) continue;
        const std::size_t colon = lines[r].find(':');
        if (colon == std::string::npos) {
            throw ParseError("line " + std::to_string(r + 1) + ": expected 'label: neighbors'");
        }
        const std::string label = trim(lines[r].substr(0, colon));
        const auto it = index.find(label);
        if (it == index.end()) {
            throw ParseError("line " + std::to_string(r + 1) + ": unknown label '" + label + "'");
        }
        const std::size_t x = it->second;
        for (const auto& cell : split(lines[r].substr(colon + 1), ',')) {
            const std::string name = trim(cell);
            if (name.empty()) continue;
            const auto nit = index.find(name);
            if (nit == index.end()) {
                throw ParseError("line " + std::to_string(r + 1) + ": unknown neighbor '" +
                                 name + "'");
            }
            if (nit->second != x) adjacency[x].push_back(nit->second);
        }
        std::sort(adjacency[x].begin(), adjacency[x].end());
        adjacency[x].erase(std::unique(adjacency[x].begin(), adjacency[x].end()),
                           adjacency[x].end());
    }
    return adjacency;
}

std::vector<std::vector<std::size_t>> load_adjacency(const std::filesystem::path& path,
                                                     const std::vector<std::string>& labels) {
    return parse_adjacency(read_file(path), labels);
}

}  // namespace exemplars
