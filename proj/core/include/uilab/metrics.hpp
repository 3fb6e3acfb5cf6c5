#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uilab/functionality.hpp"

namespace uilab {

struct ModeUnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MetricConfig {
    // Mean functionality count discovered by one hour of human exploration;
    // the normalization base for hufo.
    double structured_base = 2382.0;
    double screen_base = 1606.0;
    std::vector<int> checkpoints{500, 1000, 2000};
    std::vector<OverrideRule> overrides;

    double base(Mode m) const { return m == Mode::Structured ? structured_base : screen_base; }
};

// Depth-truncated DOM digest for the diversity comparator. Depth 1 sees the
// page root (the theme class lives there), depth 2 adds the element
// kind/class multiset, depth 3 adds labels.
struct DomSnapshot {
    std::string theme_class;
    uint64_t structure_digest = 0;
    uint64_t label_digest = 0;

    auto operator<=>(const DomSnapshot&) const = default;
};

DomSnapshot dom_snapshot(const StructuredObservation& obs,
                         const std::vector<OverrideRule>& rules);

// Per-step functionality accounting for one trajectory under one mode.
struct MetricTrace {
    Mode mode = Mode::Structured;
    int steps = 0;
    std::set<FunctionalityKey> cumulative;
    std::set<FunctionalityKey> acted;
    std::vector<int> cumulative_counts;               // UFO after each step
    std::vector<int> acted_counts;                    // distinct acted after each step
    std::vector<std::vector<FunctionalityKey>> additions;  // keys first revealed at step t
    std::vector<DomSnapshot> snapshots;               // structured traces only

    void record_step(const std::set<FunctionalityKey>& observed,
                     const std::optional<FunctionalityKey>& acted_key,
                     const std::optional<DomSnapshot>& snapshot = std::nullopt);
};

// Cumulative distinct-functionality counts; index t-1 holds UFO@t.
std::vector<int> ufo_curve(const MetricTrace& trace);

// Human-normalized UFO, in percent. Values above 100 are meaningful (expert
// humans exceed the average base).
double hufo(double ufo, Mode mode, const MetricConfig& config);

// Distinct functionalities acted upon divided by steps so far, one value per
// step, each in [0, 1].
std::vector<double> uft_curve(const MetricTrace& trace);

// Count of distinct depth-truncated page signatures seen by a structured
// trace. Throws ModeUnsupportedError for screen traces.
int d3c(const MetricTrace& trace, int depth = 2);
int d3c(std::span<const DomSnapshot> snapshots, int depth = 2);

// Last value of `curve` at or before `step` (curves are per-step cumulative).
int curve_value_at(const std::vector<int>& curve, int step);

}  // namespace uilab
