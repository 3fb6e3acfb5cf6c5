#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "uilab/action.hpp"
#include "uilab/site.hpp"

namespace uilab {

inline constexpr const char* kAgentRandom = "random";
inline constexpr const char* kAgentHeuristicRandom = "heuristic-random";
inline constexpr const char* kAgentBfs = "bfs";
inline constexpr const char* kAgentDfs = "dfs";
inline constexpr const char* kAgentGuiBee = "guibee";
inline constexpr const char* kAgentExplorer = "explorer";

// Everything needed to reproduce one trajectory, echoed verbatim into the
// run output.
struct RunManifest {
    std::string agent = kAgentRandom;
    Level level = Level::Abundant;
    Mode mode = Mode::Structured;
    uint64_t seed = 1;
    long budget = 2000;
    std::vector<int> checkpoints{500, 1000, 2000};
    std::string out_path;
    bool oracle = false;
    std::set<std::string> ablations;  // "nm1", "na2", "no-priority"
    std::string obs_fidelity = "keys";  // "full" serializes observations per step
    std::string site_file;              // custom site document; empty = generate
    std::string describer_endpoint;     // external backend; empty = deterministic

    bool oracle_effective() const {
        return oracle || agent == kAgentHeuristicRandom || agent == kAgentGuiBee;
    }

    void validate() const;
    nlohmann::ordered_json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

}  // namespace uilab
