#pragma once

#include "uilab/trajectory_log.hpp"

namespace uilab {

struct ReplayReport {
    bool ok = false;
    long divergence_step = -1;  // first step whose replayed outcome differs
    std::string message;
    std::vector<int> ufo_structured;  // recomputed curves
    std::vector<int> ufo_screen;
};

// Re-execute the logged actions through a fresh environment and compare the
// recomputed outcomes against the stored ones, step by step. Throws
// VersionMismatchError when the log or the site it references predates the
// current schemas; never silently recomputes across versions.
ReplayReport replay(const std::string& log_path);
ReplayReport replay(const TrajectoryLog& log);

}  // namespace uilab
