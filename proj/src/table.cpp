// SPDX-License-Identifier: Apache-2.0

#include "orilink/table.hpp"

#include <cmath>
#include <cstdio>

#include "orilink/errors.hpp"

namespace orilink {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    // Shortest representation that round-trips: try increasing precision.
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    return buf;
}

void TableArtifact::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw ValidationError("table row width does not match the schema");
    rows.push_back(std::move(cells));
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void TableArtifact::write_csv(std::ostream& os) const {
    os << "# scenario=" << scenario << "\r\n";
    os << "# config_hash=" << config_hash << "\r\n";
    os << "# seed=" << seed << "\r\n";
    os << "# version=" << version << "\r\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(columns[i]);
    }
    os << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(row[i]);
        }
        os << "\r\n";
    }
}

}  // namespace orilink
