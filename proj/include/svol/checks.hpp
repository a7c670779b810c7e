#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "svol/volumes.hpp"

namespace svol {

/// Identifies the instance a check ran on.
struct CheckInstance {
    int n = 0;
    int k = 0;
    std::string metric;
    std::uint64_t seed = 0;
    std::string detail;  // kind, pair, ... when the check has extra shape

    auto tie() const { return std::tie(n, k, metric, seed, detail); }
    bool operator==(const CheckInstance&) const = default;
};

/// Structured outcome of one verification. `residual` is the rendered normal
/// form of the difference the check asserts to be zero; for report-only
/// checks it is recorded verbatim rather than asserted.
struct CheckReport {
    enum class Status { pass, fail, report_only };

    std::string check_name;
    CheckInstance instance;
    Status status = Status::pass;
    std::string residual = "0";
    double elapsed_seconds = 0.0;
    std::string provenance;
};

std::string status_name(CheckReport::Status s);

// Theorem checks. Each asserts exact normal-form-zero conditions; any
// nonzero residual is embedded in the report.
CheckReport check_alternating(int n, std::uint64_t seed);
CheckReport check_bullet_approximation(int n, const MetricSpec& m, const std::string& metric_name,
                                       std::uint64_t seed);
CheckReport check_gram_reduction(int n, int k, SimplexKind kind, const MetricSpec& m,
                                 const std::string& metric_name, std::uint64_t seed);
CheckReport check_symmetry(int n, int k, const MetricSpec& m, const std::string& metric_name,
                           std::uint64_t seed);
CheckReport check_vanish_on_first_neighbours(int n, int k, const MetricSpec& m,
                                             const std::string& metric_name, std::uint64_t seed,
                                             int pair_i, int pair_j);
CheckReport check_extension_independence(int n, int k, const MetricSpec& m,
                                         const std::string& metric_name,
                                         const std::vector<std::uint64_t>& perturbation_seeds);
CheckReport check_volume_form_identity(int n, const MetricSpec& m, const std::string& metric_name,
                                       std::uint64_t seed);
/// Report-only: records the residual of Heron vs Gram square area without
/// asserting it.
CheckReport experiment_heron_vs_gram(int n, const MetricSpec& m, const std::string& metric_name,
                                     std::uint64_t seed);

const std::vector<std::string>& all_check_names();

struct RunConfig;  // defined in svol/config.hpp

/// Runs the configured checks over the (n, k, metric, seed) grid.
/// Structural errors from individual checks become failed reports. Reports
/// are ordered by (check name, instance) regardless of execution order.
std::vector<CheckReport> run_suite(const RunConfig& config);

}  // namespace svol
