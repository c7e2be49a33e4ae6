// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace orilink {

// Shortest-round-trip decimal rendering of a double; re-parsing reproduces
// the exact bit pattern.
std::string format_double(double v);

// Tabular result of one scenario run. The CSV rendering carries the
// provenance triple as leading '#' comment lines before the RFC-4180 header
// and records.
struct TableArtifact {
    std::string scenario;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version;
    bool ok = true;  // false when a validation scenario found a failure

    void add_row(std::vector<std::string> cells);
    void write_csv(std::ostream& os) const;
};

}  // namespace orilink
