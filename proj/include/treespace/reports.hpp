#pragma once

// Machine-readable reports behind the command-line interface. Reports are
// byte-stable for a fixed configuration, seed and schema version; every
// arbitrary-precision value is serialized as a decimal string. The verify
// report additionally carries wall-clock timings and is therefore the one
// report not covered by golden files.

#include <string>

#include <json.hpp>

#include "treespace/whitehouse.hpp"

namespace treespace {

struct RunConfig {
    std::string command;
    int n = 4;
    std::string space = "tree-space";  // or "partition-nerve"
    std::string format = "json";       // or "text"
    std::string depth = "quick";       // or "full"
    std::uint64_t seed = 20240817;
    int jobs = 0;                      // 0 = environment default
    std::string module = "lie";        // character: lie | superlie | hatlie | homology
    bool list_items = false;           // enumerate: include the tree listing
    std::string complex_file;          // verify: validate a dump instead of building
};

/// Supported ranges per command; violations raise std::invalid_argument
/// (mapped to the usage exit code by the CLI).
void check_config(const RunConfig& cfg);

nlohmann::ordered_json report_enumerate(const RunConfig& cfg);
nlohmann::ordered_json report_character(const RunConfig& cfg);
nlohmann::ordered_json report_whitehouse(const RunConfig& cfg);
nlohmann::ordered_json report_cycle(const RunConfig& cfg);
nlohmann::ordered_json report_verify(const RunConfig& cfg);

/// True when the report carries no failed verdict.
bool report_passed(const nlohmann::ordered_json& report);

/// Plain-text rendering of a report, one "key: value" line per leaf.
std::string render_text(const nlohmann::ordered_json& report);

/// JSON serialization used everywhere (2-space indent, trailing newline).
std::string render_json(const nlohmann::ordered_json& report);

}  // namespace treespace
