#pragma once

#include "uilab/trajectory_log.hpp"

namespace uilab {

struct ReportOptions {
    std::string glob;     // e.g. "runs/*.jsonl"
    std::string out_dir;  // receives report.csv, summary.csv and the SVG charts
    MetricConfig metrics;
};

// Expand a single-directory glob ('*' wildcards in the filename part).
std::vector<std::string> expand_glob(const std::string& pattern);

// Aggregate a set of run logs into the per-checkpoint CSV, the per-level
// summary table and one hufo-vs-step chart per (mode, level).
void write_report(const std::vector<TrajectoryLog>& logs, const ReportOptions& options);
void write_report(const ReportOptions& options);

}  // namespace uilab
