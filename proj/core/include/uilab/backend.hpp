#pragma once

#include "uilab/actor.hpp"

namespace uilab {

// Bridge to an external describer/actor service speaking JSON over HTTP.
// POST {endpoint}/describe with the observation rendering and a prompt
// template id; the reply carries the state text and the ranked action list.
// POST {endpoint}/act with the goal and observation; the reply carries the
// outcome/description/action triple or a terminal signal. Any transport or
// shape problem throws BackendFailure, which the resilient wrappers turn
// into one retry and then a deterministic fallback.
class HttpDescriber : public DescriberBackend {
public:
    explicit HttpDescriber(std::string endpoint);
    DescribeResult describe(const AgentView& view) override;

private:
    std::string endpoint_;
};

class HttpActor : public ActorBackend {
public:
    // The fallback executes macros whenever the service is unreachable.
    HttpActor(std::string endpoint, std::unique_ptr<ActorBackend> fallback);
    void begin_macro(const MacroAction& macro) override;
    ActorReply next(const MacroAction& macro, const AgentView& view) override;

private:
    std::string endpoint_;
    std::unique_ptr<ActorBackend> fallback_;
    std::vector<std::string> history_;
    bool fell_back_ = false;
};

// Reads UILAB_DESCRIBER_ENDPOINT; empty when unset.
std::string describer_endpoint_from_env();

nlohmann::ordered_json render_view(const AgentView& view);

}  // namespace uilab
