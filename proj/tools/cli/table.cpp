#include "cli/table.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace muskit::cli {

void Table::add_meta(const std::string& key, const std::string& value) {
    meta.emplace_back(key, value);
}

void Table::add_meta(const std::string& key, double value) {
    meta.emplace_back(key, format_double(value));
}

void Table::add_meta(const std::string& key, std::int64_t value) {
    meta.emplace_back(key, std::to_string(value));
}

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
    if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
    return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (const auto& [k, v] : table.meta) {
        out += "# " + k + "=" + v + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ",";
        out += table.columns[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ",";
            out += cell_to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : table.meta) meta[k] = v;
    j["meta"] = meta;
    j["columns"] = table.columns;
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell& c : row) {
            if (std::holds_alternative<double>(c)) {
                const double v = std::get<double>(c);
                // JSON numbers cannot carry infinities; spell them out
                if (std::isinf(v)) {
                    r.push_back(format_double(v));
                } else {
                    r.push_back(v);
                }
            } else if (std::holds_alternative<std::int64_t>(c)) {
                r.push_back(std::get<std::int64_t>(c));
            } else if (std::holds_alternative<bool>(c)) {
                r.push_back(std::get<bool>(c));
            } else {
                r.push_back(std::get<std::string>(c));
            }
        }
        data.push_back(std::move(r));
    }
    j["data"] = std::move(data);
    return j.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

}  // namespace muskit::cli
