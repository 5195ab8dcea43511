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

#ifndef QDUPLEX_REPORT_HPP
#define QDUPLEX_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qduplex {

using ReportValue = std::variant<std::int64_t, double, bool, std::string>;

/// Ordered named cells; every row of a report must carry the same column
/// names in the same order.
struct ReportRow {
    std::vector<std::pair<std::string, ReportValue>> cells;

    ReportRow& add(std::string name, std::int64_t v);
    ReportRow& add(std::string name, int v) { return add(std::move(name), static_cast<std::int64_t>(v)); }
    ReportRow& add(std::string name, double v);
    ReportRow& add(std::string name, bool v);
    ReportRow& add(std::string name, std::string v);
    ReportRow& add(std::string name, const char* v) { return add(std::move(name), std::string(v)); }
};

/// Doubles rendered with 17 significant digits so CSV and JSON report the
/// same value text and reruns are byte-identical.
std::string format_report_value(const ReportValue& v);

/// Writes `rows` to `path` as CSV (header line + one line per row) or as a
/// JSON array of objects with identical keys. Throws std::invalid_argument
/// on empty rows or mismatched column sets (before creating the file) and
/// std::runtime_error on I/O failure.
void emit_report(const std::vector<ReportRow>& rows, const std::string& path,
                 const std::string& format);

}  // namespace qduplex

#endif
