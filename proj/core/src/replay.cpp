#include "uilab/replay.hpp"

#include <algorithm>
#include <fstream>

#include "uilab/observation.hpp"
#include "uilab/runner.hpp"

namespace uilab {

ReplayReport replay(const std::string& log_path) {
    return replay(read_log(log_path));
}

ReplayReport replay(const TrajectoryLog& log) {
    SiteGraph site;
    if (!log.manifest.site_file.empty()) {
        std::ifstream in(log.manifest.site_file);
        if (!in) throw ConfigError("cannot open site file " + log.manifest.site_file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        site = import_site(text);
    } else {
        site = generate_site(log.manifest.level, log.manifest.seed);
    }
    if (fnv1a64(export_site(site)) != log.site_fnv) {
        throw VersionMismatchError(
            "the reconstructed site does not match the log's fingerprint; "
            "the log predates the current site schema");
    }

    EnvState env = reset(site, log.manifest.mode);
    RunRecorder recorder(site, env, false, nullptr, false);

    ReplayReport report;
    for (const auto& entry : log.steps) {
        TransitionRecord rec = step(env, entry.action);
        recorder.on_step(rec);

        std::string divergence;
        if (rec.url_after != entry.url_after) {
            divergence = "url " + rec.url_after + " vs logged " + entry.url_after;
        } else if (rec.element_id != entry.element_id) {
            divergence = "element '" + rec.element_id + "' vs logged '" + entry.element_id + "'";
        } else if (rec.malformed != entry.malformed) {
            divergence = "malformed flag differs";
        } else {
            const auto& fresh = recorder.trace_structured.additions.back();
            std::vector<uint64_t> got;
            for (const auto& k : fresh) got.push_back(k.hash());
            std::vector<uint64_t> want = entry.new_struct_keys;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) divergence = "revealed functionality set differs";
        }
        if (!divergence.empty()) {
            report.ok = false;
            report.divergence_step = entry.index;
            report.message = "divergence at step " + std::to_string(entry.index) + ": " +
                             divergence;
            return report;
        }
    }

    if (recorder.trace_structured.cumulative_counts != log.ufo_structured ||
        recorder.trace_screen.cumulative_counts != log.ufo_screen) {
        report.ok = false;
        report.divergence_step = static_cast<long>(log.steps.size());
        report.message = "recomputed curves differ from the stored curves";
        return report;
    }

    report.ok = true;
    report.message = "replayed " + std::to_string(log.steps.size()) + " steps, zero divergence";
    report.ufo_structured = recorder.trace_structured.cumulative_counts;
    report.ufo_screen = recorder.trace_screen.cumulative_counts;
    return report;
}

}  // namespace uilab
