#include "uilab/actor.hpp"

#include <algorithm>

namespace uilab {

namespace {

enum class Flow {
    Login,
    Register,
    Wizard,
    Issue,
    Member,
    Reset,
    Search,
    Menu,
    ClickTarget,
    FillTarget,
    Scroll,
    Back,
    ClickBox,
    Unknown,
};

Flow classify(const std::string& goal) {
    auto has = [&](const char* s) { return goal.find(s) != std::string::npos; };
    if (has("sign-in form")) return Flow::Login;
    if (has("registration form")) return Flow::Register;
    if (has("create-project wizard") || has("project creation wizard")) return Flow::Wizard;
    if (has("submit a new issue")) return Flow::Issue;
    if (has("team member")) return Flow::Member;
    if (has("password reset")) return Flow::Reset;
    if (has("search the application")) return Flow::Search;
    if (has("creation menu")) return Flow::Menu;
    if (has("click the box at")) return Flow::ClickBox;
    if (has("type into")) return Flow::FillTarget;
    if (has("scroll")) return Flow::Scroll;
    if (has("step back")) return Flow::Back;
    if (has("visit one") || has("press the") || has("change the") || has("toggle") ||
        has("external link")) {
        return Flow::ClickTarget;
    }
    return Flow::Unknown;
}

bool url_is_issue_detail(const std::string& url) {
    auto pos = url.find("/issues/");
    if (pos == std::string::npos) return false;
    std::string tail = url.substr(pos + 8);
    if (tail.empty()) return false;
    return std::all_of(tail.begin(), tail.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

const StructuredElementRecord* by_id(const StructuredObservation& obs, const std::string& id) {
    for (const auto& e : obs.elements) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

const StructuredElementRecord* by_group(const StructuredObservation& obs,
                                        const std::string& hint) {
    if (const auto* exact = by_id(obs, hint)) return exact;
    std::string group = strip_index(hint);
    for (const auto& e : obs.elements) {
        if (strip_index(e.id) == group) return &e;
    }
    return nullptr;
}

ActorReply emit(const std::string& outcome, const std::string& description, Action a) {
    return {outcome, description, std::move(a), false, false};
}

ActorReply done(const std::string& outcome) {
    return {outcome, "goal reached", std::nullopt, true, false};
}

ActorReply stuck(const std::string& outcome) {
    return {outcome, "required element is missing", std::nullopt, false, true};
}

}  // namespace

void DeterministicActor::begin_macro(const MacroAction& macro) {
    page_url_.clear();
    page_step_ = 0;
    scrolls_emitted_ = 0;
    actions_emitted_ = 0;
    const Flow flow = classify(macro.goal);
    if (flow == Flow::Register) {
        ++register_counter_;
        username_ = "scout-" + std::to_string(register_counter_);
        password_ = "tricorder";
    }
    if (flow == Flow::Wizard &&
        (wizard_name_.empty() || macro.goal.find("complete") != std::string::npos)) {
        // A fresh "complete" starts a new project; continuations keep the name.
        ++project_counter_;
        wizard_name_ = "sandbox-" + std::to_string(project_counter_);
    }
    if (flow == Flow::Member) {
        ++member_counter_;
        member_name_ = "teammate-" + std::to_string(member_counter_);
    }
}

ActorReply DeterministicActor::next(const MacroAction& macro, const AgentView& view) {
    const std::string& url =
        view.mode == Mode::Structured ? view.structured->url : view.screen->url;
    if (url != page_url_) {
        page_url_ = url;
        page_step_ = 0;
    }
    ActorReply reply = view.mode == Mode::Structured ? next_structured(macro, *view.structured)
                                                     : next_screen(macro, *view.screen);
    if (reply.action) {
        ++page_step_;
        ++actions_emitted_;
    }
    return reply;
}

ActorReply DeterministicActor::next_structured(const MacroAction& macro,
                                               const StructuredObservation& obs) {
    const Flow flow = classify(macro.goal);
    const std::string where = "on " + obs.url;
    const bool signed_in = by_id(obs, "nav-logout") != nullptr;

    auto scripted = [&](const std::vector<Action>& script,
                        bool completed_when_exhausted = true) -> ActorReply {
        if (page_step_ < static_cast<int>(script.size())) {
            return emit(where, "working through the form", script[page_step_]);
        }
        if (completed_when_exhausted) return done(where);
        return stuck(where);
    };

    switch (flow) {
        case Flow::Login: {
            if (signed_in) return done("signed in, " + where);
            if (!by_id(obs, "login-user")) return stuck(where);
            if (username_.empty()) return stuck("no known credentials");
            return scripted({Action::fill("login-user", username_),
                             Action::fill("login-pass", password_),
                             Action::click("login-submit")},
                            false);
        }
        case Flow::Register: {
            if (signed_in) return done("signed in, " + where);
            if (!by_id(obs, "reg-user")) return stuck(where);
            return scripted({Action::fill("reg-user", username_),
                             Action::fill("reg-email", username_ + "@devforge.example"),
                             Action::fill("reg-pass", password_),
                             Action::click("reg-submit")},
                            false);
        }
        case Flow::Wizard: {
            if (starts_with(obs.url, "/p/")) return done("project created, " + where);
            if (by_id(obs, "wiz-name")) {
                return scripted({Action::fill("wiz-name", wizard_name_),
                                 Action::click("wiz-continue")},
                                false);
            }
            if (by_id(obs, "wiz-desc")) {
                return scripted({Action::fill("wiz-desc", "scratch space for exploring"),
                                 Action::click("wiz-continue")},
                                false);
            }
            if (by_id(obs, "wiz-create")) {
                return scripted({Action::click("wiz-create")}, false);
            }
            return stuck(where);
        }
        case Flow::Issue: {
            if (url_is_issue_detail(obs.url)) return done("issue filed, " + where);
            if (!by_id(obs, "issue-title")) return stuck(where);
            return scripted({Action::fill("issue-title", "triage the color palette"),
                             Action::fill("issue-body", "steps to reproduce are included"),
                             Action::click("issue-submit")},
                            false);
        }
        case Flow::Member: {
            if (obs.url == "/users") return done("member added");
            if (!by_id(obs, "user-name")) return stuck(where);
            return scripted({Action::fill("user-name", member_name_),
                             Action::fill("user-email", member_name_ + "@devforge.example"),
                             Action::click("user-create")},
                            false);
        }
        case Flow::Reset: {
            if (!by_id(obs, "reset-email")) return stuck(where);
            return scripted({Action::fill("reset-email", "scout@devforge.example"),
                             Action::click("reset-send")});
        }
        case Flow::Search: {
            if (obs.url == "/search") return done("search results open");
            if (!by_id(obs, "nav-search")) return stuck(where);
            return scripted({Action::fill("nav-search", "atlas"),
                             Action::click("nav-search-btn")},
                            false);
        }
        case Flow::Menu: {
            if (!by_id(obs, "nav-new-btn")) return stuck(where);
            return scripted({Action::click("nav-new-btn")});
        }
        case Flow::ClickTarget: {
            const auto* target = by_group(obs, macro.target_hint);
            if (!target) return stuck(where);
            return scripted({Action::click(target->id)});
        }
        case Flow::FillTarget: {
            const auto* target = by_group(obs, macro.target_hint);
            if (!target) return stuck(where);
            return scripted({Action::fill(target->id, "probe text")});
        }
        case Flow::Scroll: {
            if (scrolls_emitted_ >= 3) return done("reached the lower sections");
            ++scrolls_emitted_;
            return emit(where, "scrolling down", Action::scroll_down());
        }
        case Flow::Back:
            return scripted({Action::go_back()});
        case Flow::ClickBox:
        case Flow::Unknown:
            return stuck("goal not understood " + where);
    }
    return stuck(where);
}

ActorReply DeterministicActor::next_screen(const MacroAction& macro,
                                           const ScreenObservation& obs) {
    const Flow flow = classify(macro.goal);
    const std::string where = "on " + obs.url;

    auto center = [](const Rect& r) {
        return std::pair(r.x + r.w / 2, r.y + r.h / 2);
    };

    // Field boxes read top to bottom; the submit is the small box below them.
    auto form_script = [&](const std::vector<std::string>& texts) -> std::vector<Action> {
        std::vector<const GeomBox*> fields;
        for (const auto& g : obs.geometry) {
            if (g.box.y > 56 && g.box.w >= 300 && g.box.h <= 140) fields.push_back(&g);
        }
        std::sort(fields.begin(), fields.end(),
                  [](const GeomBox* a, const GeomBox* b) { return a->box.y < b->box.y; });
        int last_y = 56;
        std::vector<Action> script;
        for (size_t i = 0; i < fields.size(); ++i) {
            auto [cx, cy] = center(fields[i]->box);
            std::string text = i < texts.size() ? texts[i] : texts.empty() ? "probe" : texts.back();
            script.push_back(Action::fill_xy(cx, cy, text));
            last_y = std::max(last_y, fields[i]->box.y);
        }
        const GeomBox* submit = nullptr;
        for (const auto& g : obs.geometry) {
            if (g.box.w >= 100 && g.box.w < 300 && g.box.h >= 36 && g.box.h <= 48 &&
                g.box.y > last_y) {
                if (!submit || g.box.y < submit->box.y) submit = &g;
            }
        }
        if (submit) {
            auto [cx, cy] = center(submit->box);
            script.push_back(Action::click_xy(cx, cy));
        }
        return script;
    };

    auto scripted = [&](const std::vector<Action>& script, bool done_when_exhausted,
                        bool predicate_met) -> ActorReply {
        if (predicate_met) return done(where);
        if (page_step_ < static_cast<int>(script.size())) {
            return emit(where, "driving the visible form", script[page_step_]);
        }
        if (done_when_exhausted) return done(where);
        return stuck(where);
    };

    switch (flow) {
        case Flow::Login:
            return scripted(form_script({username_.empty() ? "scout-1" : username_, password_}),
                            false, obs.url == "/");
        case Flow::Register:
            return scripted(
                form_script({username_, username_ + "@devforge.example", password_}), false,
                obs.url == "/");
        case Flow::Wizard:
            return scripted(form_script({wizard_name_, wizard_name_, "private"}), false,
                            starts_with(obs.url, "/p/"));
        case Flow::Issue:
            return scripted(form_script({"triage the color palette",
                                         "steps to reproduce are included", "bug"}),
                            false, url_is_issue_detail(obs.url));
        case Flow::Member:
            return scripted(form_script({member_name_, member_name_ + "@devforge.example"}),
                            false, obs.url == "/users");
        case Flow::Reset:
            return scripted(form_script({"scout@devforge.example"}), true, false);
        case Flow::ClickBox: {
            if (!starts_with(macro.target_hint, "xy:")) return stuck(where);
            auto parts = split(macro.target_hint.substr(3), ',');
            if (parts.size() != 2) return stuck(where);
            int cx = std::stoi(parts[0]);
            int cy = std::stoi(parts[1]);
            return scripted({Action::click_xy(cx, cy)}, true, false);
        }
        case Flow::Scroll: {
            if (obs.scroll_y >= obs.max_scroll) return done("at the bottom");
            return emit(where, "scrolling down", Action::scroll_down());
        }
        case Flow::Back:
            return scripted({Action::go_back()}, true, false);
        case Flow::Search:
        case Flow::Menu:
        case Flow::ClickTarget:
        case Flow::FillTarget:
        case Flow::Unknown:
            return stuck("goal not executable from pixels " + where);
    }
    return stuck(where);
}

}  // namespace uilab
