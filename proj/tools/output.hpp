#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dipspec::cli {

using Json = nlohmann::ordered_json;

// Blank cells render as empty csv fields / json null.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific, 14);
    return std::string(buf, res.ptr);
}

inline std::string cell_to_csv(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

inline std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (j) out += ',';
        out += t.columns[j];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += cell_to_csv(row[j]);
        }
        out += '\n';
    }
    return out;
}

inline Json cell_to_json(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) return *d;
    return std::get<std::string>(c);
}

inline Json table_to_json(const Table& t) {
    Json j;
    j["columns"] = t.columns;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(cell_to_json(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

struct OutputSink {
    std::string format = "csv";  // csv | json
    std::string path;            // empty: stdout

    void write(const Table& table, const Json& config, const Json& extras,
               const Json& diagnostics) const {
        std::string payload;
        if (format == "json") {
            Json doc;
            doc["config"] = config;
            Json results = table_to_json(table);
            for (auto it = extras.begin(); it != extras.end(); ++it) results[it.key()] = it.value();
            doc["results"] = std::move(results);
            doc["diagnostics"] = diagnostics;
            payload = doc.dump(2);
            payload += '\n';
        } else {
            payload = to_csv(table);
        }
        if (path.empty()) {
            std::fwrite(payload.data(), 1, payload.size(), stdout);
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        }
    }
};

}  // namespace dipspec::cli
