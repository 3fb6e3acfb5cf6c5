#include "uilab/env.hpp"

namespace uilab {

namespace {

bool is_external(const std::string& url) {
    return starts_with(url, "http://") || starts_with(url, "https://");
}

void arrive(EnvState& st, const std::string& dest, bool push_history) {
    if (push_history) {
        st.back_stack.push_back(st.url);
        st.forward_stack.clear();
    }
    st.url = dest;
    st.scroll_y = 0;
    st.session.pending.clear();
    st.session.open_menu.clear();
}

void navigate(EnvState& st, const std::string& url) {
    arrive(st, resolve_destination(*st.site, st.session, url), true);
}

void do_back(EnvState& st) {
    if (st.back_stack.empty()) return;
    std::string dest = st.back_stack.back();
    st.back_stack.pop_back();
    st.forward_stack.push_back(st.url);
    // The page behind us may have become invalid (entity deleted, login
    // state changed); re-resolve without touching history again.
    arrive(st, resolve_destination(*st.site, st.session, dest), false);
}

void do_forward(EnvState& st) {
    if (st.forward_stack.empty()) return;
    std::string dest = st.forward_stack.back();
    st.forward_stack.pop_back();
    st.back_stack.push_back(st.url);
    arrive(st, resolve_destination(*st.site, st.session, dest), false);
}

std::string pending_text(const EnvState& st, const std::string& id) {
    auto it = st.session.pending.find(id);
    return it == st.session.pending.end() ? std::string() : it->second;
}

std::string unique_created_slug(const EnvState& st, const std::string& name) {
    std::string base = slugify(name);
    if (base.empty()) base = "untitled";
    auto taken = [&](const std::string& s) {
        if (st.site->seeded_project(s)) return true;
        for (const auto& cp : st.session.created_projects) {
            if (cp.slug == s) return true;
        }
        return false;
    };
    std::string slug = base;
    for (int i = 2; taken(slug); ++i) slug = base + "-" + std::to_string(i);
    return slug;
}

bool user_exists(const EnvState& st, const std::string& name) {
    for (const auto& u : st.site->visible_users(st.session)) {
        if (u == name) return true;
    }
    return false;
}

void apply_click(EnvState& st, const Element& elem) {
    if (!elem.interactive()) return;
    Session& ses = st.session;
    const SiteGraph& site = *st.site;

    switch (elem.effect) {
        case EffectKind::None:
            return;
        case EffectKind::Navigate: {
            const std::string& target = elem.href.empty() ? elem.effect_target : elem.href;
            if (!target.empty()) navigate(st, target);
            return;
        }
        case EffectKind::External:
        case EffectKind::Upload:
            navigate(st, kBoundaryUrl);
            return;
        case EffectKind::NavigateBack:
            do_back(st);
            return;
        case EffectKind::Logout:
            if (site.level == Level::Sparse) {
                ses.logged_in = false;
                ses.current_user.clear();
                navigate(st, kLandingUrl);
            } else {
                navigate(st, kLogoutDisabledUrl);
            }
            return;
        case EffectKind::ToggleMenu:
            ses.open_menu = ses.open_menu == elem.effect_target ? "" : elem.effect_target;
            return;
        case EffectKind::ThemeCycle:
            if (!site.themes.empty()) {
                ses.theme_index = (ses.theme_index + 1) % static_cast<int>(site.themes.size());
            }
            return;
        case EffectKind::SearchSubmit:
            navigate(st, "/search");
            return;
        case EffectKind::SubmitLogin: {
            std::string user = pending_text(st, "login-user");
            std::string pass = pending_text(st, "login-pass");
            if (!user.empty() && !pass.empty() && user_exists(st, user)) {
                ses.logged_in = true;
                ses.current_user = user;
                navigate(st, kLandingUrl);
            }
            return;
        }
        case EffectKind::SubmitRegister: {
            std::string user = pending_text(st, "reg-user");
            std::string pass = pending_text(st, "reg-pass");
            if (user.empty() || pass.empty() || user_exists(st, user)) return;
            if (static_cast<int>(ses.created_users.size()) >= site.max_created_users) return;
            ses.created_users.push_back(user);
            ses.logged_in = true;
            ses.current_user = user;
            navigate(st, kLandingUrl);
            return;
        }
        case EffectKind::WizardContinue: {
            if (elem.effect_target == "/projects/new/details") {
                std::string name = pending_text(st, "wiz-name");
                if (name.empty()) return;
                ses.wizard.name = name;
                ses.wizard.visibility = pending_text(st, "wiz-visibility");
                ses.wizard.stage = std::max(ses.wizard.stage, 1);
            } else {
                if (ses.wizard.stage < 1) return;
                ses.wizard.description = pending_text(st, "wiz-desc");
                ses.wizard.topics = pending_text(st, "wiz-topics");
                ses.wizard.readme = !pending_text(st, "wiz-readme").empty();
                ses.wizard.stage = 2;
            }
            navigate(st, elem.effect_target);
            return;
        }
        case EffectKind::WizardCreate: {
            if (ses.wizard.stage < 2) return;
            if (static_cast<int>(ses.created_projects.size()) >= site.max_created_projects) return;
            std::string slug = unique_created_slug(st, ses.wizard.name);
            ses.created_projects.push_back({slug, ses.wizard.name});
            ses.wizard = WizardState{};
            navigate(st, "/p/" + slug);
            return;
        }
        case EffectKind::CreateIssue: {
            const std::string& slug = elem.effect_target;
            if (pending_text(st, "issue-title").empty()) return;
            int extra = 0;
            auto it = ses.extra_issues.find(slug);
            if (it != ses.extra_issues.end()) extra = it->second;
            if (extra >= site.max_created_issues_per_project) return;
            ses.extra_issues[slug] = extra + 1;
            navigate(st, "/p/" + slug + "/issues/" +
                             std::to_string(site.issue_count(ses, slug)));
            return;
        }
        case EffectKind::CreateUser: {
            std::string user = pending_text(st, "user-name");
            if (user.empty() || user_exists(st, user)) return;
            if (static_cast<int>(ses.created_users.size()) >= site.max_created_users) return;
            ses.created_users.push_back(user);
            navigate(st, "/users");
            return;
        }
        case EffectKind::DeleteProject: {
            const std::string& slug = elem.effect_target;
            std::string typed = pending_text(st, "delete-confirm");
            const SeededProject* sp = site.seeded_project(slug);
            std::string expected;
            if (sp) {
                expected = sp->name;
            } else {
                for (const auto& cp : ses.created_projects) {
                    if (cp.slug == slug) expected = cp.name;
                }
            }
            if (typed.empty() || typed != expected) return;
            ses.deleted_projects.insert(slug);
            navigate(st, "/projects");
            return;
        }
        case EffectKind::Transient:
            return;
    }
}

void apply_fill(EnvState& st, const Element& elem, const std::string& text) {
    if (!elem.enabled) return;
    switch (elem.kind) {
        case ElementKind::Input:
        case ElementKind::Textarea:
        case ElementKind::Select:
            st.session.pending[elem.id] = text;
            return;
        case ElementKind::Checkbox:
            st.session.pending[elem.id] = text.empty() ? "on" : text;
            return;
        default:
            return;
    }
}

}  // namespace

std::string resolve_destination(const SiteGraph& site, const Session& session,
                                const std::string& url) {
    if (is_external(url)) return kBoundaryUrl;

    if (!site.generated) {
        auto it = site.static_pages.find(url);
        if (it == site.static_pages.end()) return kBoundaryUrl;
        if (it->second.requires_login && !session.logged_in) return kLoginUrl;
        return url;
    }

    auto match = site.match_route(url);
    if (!match) return kBoundaryUrl;
    if (match->requires_login && !session.logged_in) return kLoginUrl;
    if (session.logged_in &&
        (match->pattern == "/login" || match->pattern == "/register" ||
         match->pattern == "/password-reset")) {
        return kLandingUrl;
    }
    if (!build_page(site, url, session)) return kBoundaryUrl;  // stale entity
    return url;
}

EnvState reset(const SiteGraph& site, Mode mode) {
    EnvState st;
    st.site = &site;
    st.mode = mode;
    st.session = initial_session(site);
    st.url = resolve_destination(site, st.session, kLandingUrl);
    return st;
}

Page current_page(const EnvState& state) {
    auto page = build_page(*state.site, state.url, state.session);
    if (!page) throw std::logic_error("environment is on an unmaterializable URL: " + state.url);
    return *std::move(page);
}

TransitionRecord step(EnvState& state, const Action& action) {
    TransitionRecord rec;
    rec.action = action;
    rec.url_before = state.url;
    state.steps_taken += 1;
    rec.step_index = state.steps_taken;

    if (!action.valid_for(state.mode)) {
        rec.malformed = true;
        rec.url_after = state.url;
        return rec;
    }

    switch (action.kind) {
        case ActionKind::ScrollUp:
            state.scroll_y = std::max(0, state.scroll_y - kScrollStep);
            break;
        case ActionKind::ScrollDown:
            state.scroll_y = std::min(current_page(state).max_scroll(),
                                      state.scroll_y + kScrollStep);
            break;
        case ActionKind::GoBack:
            do_back(state);
            break;
        case ActionKind::GoForward:
            do_forward(state);
            break;
        case ActionKind::Goto:
            navigate(state, action.url);
            break;
        case ActionKind::Click:
        case ActionKind::Fill:
        case ActionKind::Hover: {
            Page page = current_page(state);
            const Element* elem = page.find(action.element_id);
            if (!elem) {
                rec.malformed = true;
                break;
            }
            rec.element_id = elem->id;
            if (action.kind == ActionKind::Click) {
                apply_click(state, *elem);
            } else if (action.kind == ActionKind::Fill) {
                apply_fill(state, *elem, action.text);
            } else {
                // Hover reveals declared dropdowns and nothing else.
                if (elem->enabled && elem->effect == EffectKind::ToggleMenu) {
                    state.session.open_menu = elem->effect_target;
                }
            }
            break;
        }
        case ActionKind::ClickXY:
        case ActionKind::FillXY: {
            Page page = current_page(state);
            const Element* elem = hit_test(page, state.scroll_y, action.x, action.y);
            if (!elem) break;  // a miss is a plain no-op
            rec.element_id = elem->id;
            if (action.kind == ActionKind::ClickXY) {
                apply_click(state, *elem);
            } else {
                apply_fill(state, *elem, action.text);
            }
            break;
        }
    }

    rec.url_after = state.url;
    return rec;
}

}  // namespace uilab
