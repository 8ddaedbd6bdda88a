#pragma once

#include <string>
#include <vector>

namespace hedgekit::csv {

struct Row {
    std::size_t line = 0;  // 1-based line of the first character of the record
    std::vector<std::string> fields;
};

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

// RFC-4180 reader: quoted fields may contain commas, quotes ("" escape) and
// newlines. Throws ParseError on unreadable files or broken quoting.
Table read_file(const std::string& path);
Table parse(const std::string& text);

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double value);

// Quotes a field only when RFC-4180 requires it.
std::string escape_field(const std::string& field);

void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

std::string join_row(const std::vector<std::string>& fields);

}  // namespace hedgekit::csv
