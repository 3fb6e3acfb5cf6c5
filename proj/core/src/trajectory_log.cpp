#include "uilab/trajectory_log.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace uilab {

namespace {

nlohmann::ordered_json snapshot_to_json(const DomSnapshot& s) {
    return {{"theme", s.theme_class},
            {"structure", to_hex(s.structure_digest)},
            {"labels", to_hex(s.label_digest)}};
}

DomSnapshot snapshot_from_json(const nlohmann::json& j) {
    DomSnapshot s;
    s.theme_class = j.value("theme", "");
    s.structure_digest = std::stoull(j.value("structure", "0"), nullptr, 16);
    s.label_digest = std::stoull(j.value("labels", "0"), nullptr, 16);
    return s;
}

}  // namespace

LogWriter::LogWriter(std::string path, const RunManifest& manifest, uint64_t site_fnv,
                     std::string kg_file)
    : path_(std::move(path)), tmp_path_(path_ + ".tmp") {
    auto dir = std::filesystem::path(path_).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    out_ = std::fopen(tmp_path_.c_str(), "wb");
    if (!out_) throw ConfigError("cannot open " + tmp_path_ + " for writing");

    nlohmann::ordered_json header;
    header["type"] = "manifest";
    header["schema_version"] = kLogSchemaVersion;
    header["manifest"] = manifest.to_json();
    header["site_fnv"] = to_hex(site_fnv);
    header["kg_file"] = kg_file;
    write_line(header.dump());
}

LogWriter::~LogWriter() {
    if (out_) std::fclose(out_);
    if (!finished_) std::remove(tmp_path_.c_str());
}

void LogWriter::write_line(const std::string& line) {
    checksum_ = fnv1a64(line, checksum_);
    std::fwrite(line.data(), 1, line.size(), out_);
    std::fputc('\n', out_);
}

void LogWriter::add_step(const StepEntry& e) {
    nlohmann::ordered_json j;
    j["type"] = "step";
    j["i"] = e.index;
    j["action"] = action_to_json(e.action);
    if (!e.element_id.empty()) j["element"] = e.element_id;
    j["url_before"] = e.url_before;
    j["url_after"] = e.url_after;
    if (e.malformed) j["malformed"] = true;
    if (!e.acted_key.empty()) j["acted_key"] = e.acted_key;
    auto hexlist = [](const std::vector<uint64_t>& v) {
        auto arr = nlohmann::ordered_json::array();
        for (uint64_t h : v) arr.push_back(to_hex(h));
        return arr;
    };
    j["new_struct_keys"] = hexlist(e.new_struct_keys);
    j["new_screen_keys"] = hexlist(e.new_screen_keys);
    j["snapshot"] = snapshot_to_json(e.snapshot);
    if (!e.observation.is_null()) j["observation"] = e.observation;
    write_line(j.dump());
    ++steps_written_;
}

void LogWriter::finish(const std::vector<int>& ufo_structured,
                       const std::vector<int>& ufo_screen,
                       const std::vector<int>& acted_distinct) {
    nlohmann::ordered_json curves;
    curves["type"] = "curves";
    curves["ufo_structured"] = ufo_structured;
    curves["ufo_screen"] = ufo_screen;
    curves["acted_distinct"] = acted_distinct;
    write_line(curves.dump());

    nlohmann::ordered_json end;
    end["type"] = "end";
    end["steps"] = steps_written_;
    end["checksum"] = to_hex(checksum_);
    std::string line = end.dump();
    std::fwrite(line.data(), 1, line.size(), out_);
    std::fputc('\n', out_);
    std::fclose(out_);
    out_ = nullptr;

    std::filesystem::rename(tmp_path_, path_);
    finished_ = true;
}

TrajectoryLog read_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open log " + path);

    TrajectoryLog log;
    uint64_t checksum = 0xcbf29ce484222325ULL;
    bool saw_manifest = false, saw_curves = false, saw_end = false;
    long declared_steps = -1;
    std::string declared_checksum;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (saw_end) throw ConfigError("log has content after the end record");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("log line is not valid JSON: ") + e.what());
        }
        const std::string type = j.value("type", "");
        if (type == "end") {
            declared_steps = j.value("steps", -1L);
            declared_checksum = j.value("checksum", "");
            saw_end = true;
            continue;
        }
        checksum = fnv1a64(line, checksum);
        if (type == "manifest") {
            int version = j.value("schema_version", -1);
            if (version != kLogSchemaVersion) {
                throw VersionMismatchError("log schema version " + std::to_string(version) +
                                           " does not match " +
                                           std::to_string(kLogSchemaVersion));
            }
            log.manifest = RunManifest::from_json(j.at("manifest"));
            log.site_fnv = std::stoull(j.value("site_fnv", "0"), nullptr, 16);
            log.kg_file = j.value("kg_file", "");
            saw_manifest = true;
        } else if (type == "step") {
            StepEntry e;
            e.index = j.at("i").get<long>();
            e.action = action_from_json(j.at("action"));
            e.element_id = j.value("element", "");
            e.url_before = j.at("url_before").get<std::string>();
            e.url_after = j.at("url_after").get<std::string>();
            e.malformed = j.value("malformed", false);
            e.acted_key = j.value("acted_key", "");
            for (const auto& h : j.value("new_struct_keys", nlohmann::json::array())) {
                e.new_struct_keys.push_back(std::stoull(h.get<std::string>(), nullptr, 16));
            }
            for (const auto& h : j.value("new_screen_keys", nlohmann::json::array())) {
                e.new_screen_keys.push_back(std::stoull(h.get<std::string>(), nullptr, 16));
            }
            e.snapshot = snapshot_from_json(j.value("snapshot", nlohmann::json::object()));
            log.steps.push_back(std::move(e));
        } else if (type == "curves") {
            log.ufo_structured = j.value("ufo_structured", std::vector<int>{});
            log.ufo_screen = j.value("ufo_screen", std::vector<int>{});
            log.acted_distinct = j.value("acted_distinct", std::vector<int>{});
            saw_curves = true;
        } else {
            throw ConfigError("log contains an unknown record type: " + type);
        }
    }

    if (!saw_manifest) throw ConfigError("log is missing its manifest record");
    if (!saw_curves || !saw_end) throw ConfigError("log is truncated (no end record)");
    if (declared_steps != static_cast<long>(log.steps.size())) {
        throw ConfigError("log step count does not match its end record");
    }
    if (declared_checksum != to_hex(checksum)) {
        throw ConfigError("log checksum mismatch; file is corrupt or was edited");
    }
    return log;
}

}  // namespace uilab
