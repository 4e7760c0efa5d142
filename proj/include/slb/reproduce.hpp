#pragma once

// Regenerates every worked numeric example into a comparison table.

#include <json.hpp>

#include <string>
#include <vector>

namespace slb {

struct ReproRow {
    std::string id;        ///< example group, e.g. "dodecahedron"
    std::string quantity;
    std::string expected;  ///< value stated in the source text, or derived by hand
    std::string computed;
    double diff = 0;       ///< |expected - computed| for numeric rows, 0 or 1 otherwise
    bool pass = false;
    std::string provenance;  ///< "stated" or "derived"
};

struct ReproOptions {
    std::string filter;             ///< substring of the group id; empty runs all
    bool perturb_petersen = false;  ///< negative control: moves one Petersen edge
    unsigned threads = 1;
};

auto reproduce_ids() -> std::vector<std::string>;
auto reproduce(const ReproOptions& opts) -> std::vector<ReproRow>;
auto to_json(const std::vector<ReproRow>& rows) -> nlohmann::json;
auto format_table(const std::vector<ReproRow>& rows) -> std::string;

}  // namespace slb
