// table.hpp - metadata + data table emitted by every subcommand, with CSV
// and JSON writers. All doubles print with 17 significant digits so that a
// parse of the output reproduces the in-memory values exactly.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace muskit::cli {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

enum class OutputFormat { Csv, Json };

struct Table {
    // ordered (key, value) metadata echoed into every output
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value);
    void add_meta(const std::string& key, std::int64_t value);
};

// 17-significant-digit representation; +-inf spelled "inf"/"-inf".
std::string format_double(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

std::string render(const Table& table, OutputFormat format);

}  // namespace muskit::cli
