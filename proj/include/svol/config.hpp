#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svol/metric.hpp"

namespace svol {

/// One metric in the run grid. Exactly one flavor is active:
///  - builtin: "euclidean" or "diag_1px1" (usable at any n)
///  - random:  seeded random metric with a Taylor degree
///  - inline:  explicit upper-triangle entries for a fixed n
struct MetricDescriptor {
    enum class Flavor { builtin, random, inline_entries };
    Flavor flavor = Flavor::builtin;

    std::string builtin_name;

    std::uint64_t random_seed = 0;
    int random_taylor_degree = 2;

    int inline_n = 0;
    // (row, col, polynomial text), 0-based indices with row <= col.
    std::vector<std::tuple<int, int, std::string>> inline_entries;

    /// Short deterministic label used in reports.
    std::string label() const;

    /// Realizes the metric at dimension n, or nullopt when the descriptor is
    /// pinned to a different dimension. Throws validation_error on bad
    /// inline entries.
    std::optional<MetricSpec> realize(int n) const;

    bool operator==(const MetricDescriptor&) const = default;
};

struct OutputConfig {
    std::string path;  // empty: stdout
    std::string format = "text";  // "text" | "structured"
    bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
    std::vector<std::string> checks;
    std::vector<int> n_values;
    std::vector<int> k_values;
    std::vector<MetricDescriptor> metrics;
    std::vector<std::uint64_t> seeds;
    OutputConfig output;

    bool operator==(const RunConfig&) const = default;

    /// FNV-1a digest of the canonical rendering; stamped into reports.
    std::string digest() const;
};

/// The default desk-scale grid: n in {1,2,3}, k in {1..3}, Euclidean +
/// diag(1+x1,1,..) + one seeded random metric, seeds {1,2}, all checks.
RunConfig default_config();

/// Parses the JSON config document. Unknown keys are rejected; errors carry
/// line/column. Schema documented in the repository README.
RunConfig parse_config(const std::string& source_text);

/// Canonical JSON rendering; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

}  // namespace svol
