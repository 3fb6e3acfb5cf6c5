#pragma once

#include <string>
#include <vector>

#include "uilab/action.hpp"
#include "uilab/site.hpp"

namespace uilab {

struct TransitionRecord {
    long step_index = 0;
    Action action;
    std::string element_id;  // element acted upon, when one resolved
    std::string url_before;
    std::string url_after;
    bool malformed = false;
};

// A single browsing session. Owned by one thread at a time; the SiteGraph it
// points into is immutable and shared.
struct EnvState {
    const SiteGraph* site = nullptr;
    Mode mode = Mode::Structured;
    std::string url;
    int scroll_y = 0;
    std::vector<std::string> back_stack;
    std::vector<std::string> forward_stack;
    Session session;
    long steps_taken = 0;
};

EnvState reset(const SiteGraph& site, Mode mode = Mode::Structured);

// Apply one atomic action. Always advances steps_taken by exactly one; a
// malformed action (wrong-mode kind or unknown element id) is flagged on the
// record and leaves everything else untouched.
TransitionRecord step(EnvState& state, const Action& action);

// Where a goto of `url` lands given gating and guardrails: the URL itself,
// the login page, or the boundary page.
std::string resolve_destination(const SiteGraph& site, const Session& session,
                                const std::string& url);

// The page for the current URL under the current session.
Page current_page(const EnvState& state);

}  // namespace uilab
