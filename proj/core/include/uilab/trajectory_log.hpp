#pragma once

#include "uilab/manifest.hpp"
#include "uilab/metrics.hpp"

namespace uilab {

struct VersionMismatchError : ConfigError {
    using ConfigError::ConfigError;
};

struct StepEntry {
    long index = 0;
    Action action;
    std::string element_id;
    std::string url_before;
    std::string url_after;
    bool malformed = false;
    std::string acted_key;                   // canonical key string, may be empty
    std::vector<uint64_t> new_struct_keys;   // hashes of keys first revealed here
    std::vector<uint64_t> new_screen_keys;
    DomSnapshot snapshot;                    // post-step page digest
    nlohmann::ordered_json observation;      // present at "full" fidelity only
};

struct TrajectoryLog {
    RunManifest manifest;
    uint64_t site_fnv = 0;
    std::string kg_file;
    std::vector<StepEntry> steps;
    std::vector<int> ufo_structured;
    std::vector<int> ufo_screen;
    std::vector<int> acted_distinct;
};

// Streaming writer. Content goes to "<path>.tmp" and is renamed into place
// only after the end record lands, so an interrupted run never leaves a log
// that read_log accepts.
class LogWriter {
public:
    LogWriter(std::string path, const RunManifest& manifest, uint64_t site_fnv,
              std::string kg_file);
    ~LogWriter();

    void add_step(const StepEntry& entry);
    void finish(const std::vector<int>& ufo_structured, const std::vector<int>& ufo_screen,
                const std::vector<int>& acted_distinct);

private:
    void write_line(const std::string& line);

    std::string path_;
    std::string tmp_path_;
    FILE* out_ = nullptr;
    uint64_t checksum_ = 0xcbf29ce484222325ULL;
    long steps_written_ = 0;
    bool finished_ = false;
};

// Parses and validates a log: schema version, end record, checksum, count.
TrajectoryLog read_log(const std::string& path);

}  // namespace uilab
