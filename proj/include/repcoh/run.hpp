#pragma once

#include <string>

#include <json.hpp>

#include "repcoh/cohomology.hpp"
#include "repcoh/complex.hpp"

namespace repcoh {

enum class EmitFormat { Table, Json, Csv };

struct RunConfig {
    Variant variant = Variant::CheckG;
    Poset base;
    int max_dim = -1;  // -1: composition length (check variants only)
    BasisMode mode = BasisMode::Intervals;
    EmitFormat emit = EmitFormat::Table;
    bool generators = false;
    uint64_t cap = kDefaultIntervalCap;
    int threads = 0;  // 0: hardware concurrency
};

struct RunResult {
    nlohmann::json result;  // deterministic: identical config, identical bytes
    nlohmann::json meta;    // wall time etc., excluded from determinism
};

RunResult run(const RunConfig& cfg);

// Renders result+meta in the configured format (table, json, csv).
std::string emit_report(const RunConfig& cfg, const RunResult& r);

}  // namespace repcoh
