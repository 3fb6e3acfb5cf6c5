#pragma once

#include <optional>

#include "uilab/describe.hpp"

namespace uilab {

// One turn of the act-agent conversation: what happened, what it intends,
// and either the next atomic action or a terminal signal.
struct ActorReply {
    std::string outcome;      // previous_action_outcome
    std::string description;  // action_description
    std::optional<Action> action;
    bool completed = false;
    bool infeasible = false;
};

class ActorBackend {
public:
    virtual ~ActorBackend() = default;
    virtual void begin_macro(const MacroAction& macro) = 0;
    virtual ActorReply next(const MacroAction& macro, const AgentView& view) = 0;
};

// Scripted executor for the deterministic stack. Structured mode resolves
// targets by element id and kind; screen mode works from the URL plus form
// geometry (wide short boxes are fields, the small box beneath them is the
// submit). Remembers registered credentials and name counters across macros.
class DeterministicActor : public ActorBackend {
public:
    void begin_macro(const MacroAction& macro) override;
    ActorReply next(const MacroAction& macro, const AgentView& view) override;

    const std::string& username() const { return username_; }

private:
    ActorReply next_structured(const MacroAction& macro, const StructuredObservation& obs);
    ActorReply next_screen(const MacroAction& macro, const ScreenObservation& obs);

    // Cross-macro memory.
    std::string username_;
    std::string password_;
    int register_counter_ = 0;
    int project_counter_ = 0;
    int member_counter_ = 0;
    std::string wizard_name_;
    std::string member_name_;

    // Per-macro progress.
    std::string page_url_;
    int page_step_ = 0;
    int scrolls_emitted_ = 0;
    int actions_emitted_ = 0;
};

}  // namespace uilab
