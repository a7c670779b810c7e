#pragma once

#include <string>
#include <vector>

#include "svol/checks.hpp"

namespace svol {

/// Renders reports deterministically (input order is preserved; run_suite
/// already sorts by check name, then instance).
///   text:       aligned table with a residual summary per row
///   structured: JSON records carrying the full rendered residual
std::string render_report(const std::vector<CheckReport>& reports, const std::string& format);

/// Writes text to path via a temp file + rename. Empty path means stdout.
void write_report_atomically(const std::string& text, const std::string& path);

/// True iff no pass/fail check failed (report-only never fails a run).
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace svol
