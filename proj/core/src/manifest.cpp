#include "uilab/manifest.hpp"

#include <algorithm>

namespace uilab {

void RunManifest::validate() const {
    static const std::set<std::string> known_agents = {
        kAgentRandom, kAgentHeuristicRandom, kAgentBfs, kAgentDfs, kAgentGuiBee, kAgentExplorer};
    if (!known_agents.count(agent)) throw ConfigError("unknown agent: " + agent);
    if ((agent == kAgentBfs || agent == kAgentDfs) && mode != Mode::Structured) {
        throw ConfigError("URL-space search agents run in structured mode only");
    }
    if (budget <= 0) throw ConfigError("budget must be positive");
    for (int c : checkpoints) {
        if (c > budget) {
            throw ConfigError("budget " + std::to_string(budget) +
                              " is below checkpoint " + std::to_string(c));
        }
    }
    static const std::set<std::string> known_ablations = {"nm1", "na2", "no-priority"};
    for (const auto& a : ablations) {
        if (!known_ablations.count(a)) throw ConfigError("unknown ablation flag: " + a);
    }
    if (!ablations.empty() && agent != kAgentExplorer) {
        throw ConfigError("ablation flags apply to the explorer agent only");
    }
    if (obs_fidelity != "keys" && obs_fidelity != "full") {
        throw ConfigError("observation fidelity must be 'keys' or 'full'");
    }
    if (out_path.empty()) throw ConfigError("an output path is required");
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["agent"] = agent;
    j["level"] = level_name(level);
    j["mode"] = mode_name(mode);
    j["seed"] = seed;
    j["budget"] = budget;
    j["checkpoints"] = checkpoints;
    j["oracle"] = oracle;
    j["ablations"] = std::vector<std::string>(ablations.begin(), ablations.end());
    j["obs_fidelity"] = obs_fidelity;
    j["site_file"] = site_file;
    j["describer_endpoint"] = describer_endpoint;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.agent = j.value("agent", kAgentRandom);
    m.level = parse_level(j.value("level", "abundant"));
    m.mode = parse_mode(j.value("mode", "structured"));
    m.seed = j.value("seed", 1ULL);
    m.budget = j.value("budget", 2000L);
    m.checkpoints = j.value("checkpoints", std::vector<int>{500, 1000, 2000});
    m.oracle = j.value("oracle", false);
    auto abl = j.value("ablations", std::vector<std::string>{});
    m.ablations = std::set<std::string>(abl.begin(), abl.end());
    m.obs_fidelity = j.value("obs_fidelity", "keys");
    m.site_file = j.value("site_file", "");
    m.describer_endpoint = j.value("describer_endpoint", "");
    return m;
}

}  // namespace uilab
