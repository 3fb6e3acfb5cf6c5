#pragma once

#include "uilab/agents.hpp"
#include "uilab/explorer.hpp"
#include "uilab/trajectory_log.hpp"

namespace uilab {

struct RunResult {
    std::string log_path;
    std::string kg_path;  // explorer runs only
    MetricTrace trace_structured;
    MetricTrace trace_screen;
    long steps = 0;
};

// Generate (or import) the site, reset the environment, drive the configured
// agent to its budget and persist the trajectory log atomically. Every run
// dual-evaluates the trajectory under both observation modes.
RunResult run_experiment(const RunManifest& manifest);

// The step bookkeeping shared by agent loops: post-step observation, key
// extraction for both modes, acted-key attribution against the pre-step
// page, trace and log updates.
class RunRecorder {
public:
    RunRecorder(const SiteGraph& site, EnvState& env, bool oracle, LogWriter* writer,
                bool full_fidelity);

    void on_step(const TransitionRecord& rec);

    StepFeedback last_feedback(const TransitionRecord& rec) const;
    const Observation& current_observation() const { return obs_; }
    int last_new_keys(Mode mode) const;

    MetricTrace trace_structured;
    MetricTrace trace_screen;

private:
    const SiteGraph& site_;
    EnvState& env_;
    bool oracle_;
    LogWriter* writer_;
    bool full_fidelity_;
    Observation obs_;  // observation of the current (post-step) state
};

}  // namespace uilab
