#include "uilab/metrics.hpp"

#include <algorithm>

namespace uilab {

DomSnapshot dom_snapshot(const StructuredObservation& obs,
                         const std::vector<OverrideRule>& rules) {
    DomSnapshot snap;
    snap.theme_class = obs.theme_class;

    std::vector<std::string> parts;
    parts.reserve(obs.elements.size());
    for (const auto& e : obs.elements) {
        parts.push_back(element_kind_name(e.kind) + "[" +
                        join(apply_overrides(e.classes, rules), ",") + "]");
    }
    std::sort(parts.begin(), parts.end());
    snap.structure_digest = fnv1a64(join(parts, ";"));

    std::vector<std::string> labels;
    labels.reserve(obs.elements.size());
    for (const auto& e : obs.elements) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    snap.label_digest = fnv1a64(join(labels, ";"));
    return snap;
}

void MetricTrace::record_step(const std::set<FunctionalityKey>& observed,
                              const std::optional<FunctionalityKey>& acted_key,
                              const std::optional<DomSnapshot>& snapshot) {
    steps += 1;
    std::vector<FunctionalityKey> fresh;
    for (const auto& k : observed) {
        if (cumulative.insert(k).second) fresh.push_back(k);
    }
    additions.push_back(std::move(fresh));
    cumulative_counts.push_back(static_cast<int>(cumulative.size()));
    if (acted_key) acted.insert(*acted_key);
    acted_counts.push_back(static_cast<int>(acted.size()));
    if (snapshot) snapshots.push_back(*snapshot);
}

std::vector<int> ufo_curve(const MetricTrace& trace) {
    return trace.cumulative_counts;
}

double hufo(double ufo, Mode mode, const MetricConfig& config) {
    return 100.0 * ufo / config.base(mode);
}

std::vector<double> uft_curve(const MetricTrace& trace) {
    std::vector<double> out;
    out.reserve(trace.acted_counts.size());
    for (size_t t = 0; t < trace.acted_counts.size(); ++t) {
        out.push_back(static_cast<double>(trace.acted_counts[t]) / static_cast<double>(t + 1));
    }
    return out;
}

int d3c(std::span<const DomSnapshot> snapshots, int depth) {
    std::set<std::string> distinct;
    for (const auto& s : snapshots) {
        std::string sig = s.theme_class;
        if (depth >= 2) sig += "|" + to_hex(s.structure_digest);
        if (depth >= 3) sig += "|" + to_hex(s.label_digest);
        distinct.insert(std::move(sig));
    }
    return static_cast<int>(distinct.size());
}

int d3c(const MetricTrace& trace, int depth) {
    if (trace.mode != Mode::Structured) {
        throw ModeUnsupportedError("the diversity comparator is defined for structured traces only");
    }
    return d3c(std::span<const DomSnapshot>(trace.snapshots), depth);
}

int curve_value_at(const std::vector<int>& curve, int step) {
    if (curve.empty() || step <= 0) return 0;
    size_t idx = std::min(curve.size(), static_cast<size_t>(step)) - 1;
    return curve[idx];
}

}  // namespace uilab
