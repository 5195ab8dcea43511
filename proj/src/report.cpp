// Copyright 2026 The qduplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduplex/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qduplex {

ReportRow& ReportRow::add(std::string name, std::int64_t v) {
    cells.emplace_back(std::move(name), ReportValue(v));
    return *this;
}

ReportRow& ReportRow::add(std::string name, double v) {
    cells.emplace_back(std::move(name), ReportValue(v));
    return *this;
}

ReportRow& ReportRow::add(std::string name, bool v) {
    cells.emplace_back(std::move(name), ReportValue(v));
    return *this;
}

ReportRow& ReportRow::add(std::string name, std::string v) {
    cells.emplace_back(std::move(name), ReportValue(std::move(v)));
    return *this;
}

std::string format_report_value(const ReportValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&v)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        return buf;
    }
    if (const auto* b = std::get_if<bool>(&v)) {
        return *b ? "true" : "false";
    }
    return std::get<std::string>(v);
}

namespace {

bool needs_csv_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
    if (!needs_csv_quoting(s)) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_cell(const ReportValue& v) {
    if (std::holds_alternative<std::string>(v)) {
        return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    }
    // Integers, doubles and booleans print as bare JSON literals with the
    // exact same text the CSV uses.
    return format_report_value(v);
}

void check_columns(const std::vector<ReportRow>& rows) {
    const ReportRow& first = rows.front();
    if (first.cells.empty()) {
        throw std::invalid_argument("emit_report: rows must have at least one column");
    }
    for (const ReportRow& row : rows) {
        if (row.cells.size() != first.cells.size()) {
            throw std::invalid_argument("emit_report: rows disagree on column count");
        }
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (row.cells[i].first != first.cells[i].first) {
                throw std::invalid_argument("emit_report: rows disagree on column names");
            }
        }
    }
}

}  // namespace

void emit_report(const std::vector<ReportRow>& rows, const std::string& path,
                 const std::string& format) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_report: rows must be nonempty");
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("emit_report: format must be csv or json");
    }
    check_columns(rows);

    // Content is assembled in memory first so an I/O failure cannot leave a
    // syntactically truncated header-only file behind by accident.
    std::string out;
    if (format == "csv") {
        for (std::size_t i = 0; i < rows.front().cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(rows.front().cells[i].first);
        }
        out += '\n';
        for (const ReportRow& row : rows) {
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                if (i) out += ',';
                out += csv_escape(format_report_value(row.cells[i].second));
            }
            out += '\n';
        }
    } else {
        out += "[\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out += "  {";
            for (std::size_t i = 0; i < rows[r].cells.size(); ++i) {
                if (i) out += ", ";
                out += "\"" + json_escape(rows[r].cells[i].first) + "\": " +
                       json_cell(rows[r].cells[i].second);
            }
            out += r + 1 < rows.size() ? "},\n" : "}\n";
        }
        out += "]\n";
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("emit_report: cannot open " + path + " for writing");
    }
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    f.flush();
    if (!f) {
        throw std::runtime_error("emit_report: write to " + path + " failed");
    }
}

}  // namespace qduplex
