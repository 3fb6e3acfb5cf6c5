#include "uilab/describe.hpp"

#include <algorithm>
#include <map>

namespace uilab {

namespace {

struct Group {
    std::string sig;
    ElementKind kind = ElementKind::Text;
    std::string label;
    std::string rep_id;
    std::string target;  // link target (template preferred)
    bool external = false;
    int count = 0;
};

bool has_class(const StructuredElementRecord& e, const std::string& cls) {
    return std::find(e.classes.begin(), e.classes.end(), cls) != e.classes.end();
}

const StructuredElementRecord* find_elem(const StructuredObservation& obs,
                                         const std::string& id) {
    for (const auto& e : obs.elements) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

std::vector<Group> group_elements(const StructuredObservation& obs) {
    std::vector<Group> groups;
    std::map<std::string, size_t> index;
    for (const auto& e : obs.elements) {
        if (!e.enabled || !is_interactive_kind(e.kind)) continue;
        std::string sig;
        if (e.kind == ElementKind::Link) {
            sig = "nav:" + (e.route_template.empty() ? e.href : e.route_template) + "|" +
                  join(e.classes, ",");
        } else {
            sig = element_kind_name(e.kind) + ":" + strip_index(e.id) + "|" +
                  join(e.classes, ",");
        }
        auto [it, fresh] = index.try_emplace(sig, groups.size());
        if (fresh) {
            Group g;
            g.sig = sig;
            g.kind = e.kind;
            g.label = e.label.empty() ? strip_index(e.id) : e.label;
            g.rep_id = e.id;
            g.target = e.route_template.empty() ? e.href : e.route_template;
            g.external = e.kind == ElementKind::Link && starts_with(e.href, "http");
            groups.push_back(std::move(g));
        }
        groups[it->second].count += 1;
    }
    return groups;
}

struct Proposal {
    std::string goal;
    std::string predicted;
    std::string hint;
};

// Composite flows recognized by their form fields. Proposed only on the page
// that actually carries the form, so executing them never needs navigation.
std::vector<Proposal> structured_composites(const StructuredObservation& obs) {
    std::vector<Proposal> out;
    auto has = [&](const char* id) { return find_elem(obs, id) != nullptr; };

    if (has("login-user") && has("login-submit")) {
        out.push_back({"fill in and submit the sign-in form",
                       "the signed-in landing page with the full navigation bar",
                       "login-submit"});
    }
    if (has("reg-user") && has("reg-submit")) {
        out.push_back({"complete the registration form and create an account",
                       "the signed-in landing page for a brand new account",
                       "reg-submit"});
    }
    if (has("wiz-name")) {
        out.push_back({"complete the create-project wizard",
                       "the overview page of a newly created project", "wiz-continue"});
    }
    if (has("wiz-desc")) {
        out.push_back({"continue the create-project wizard",
                       "the overview page of a newly created project", "wiz-continue"});
    }
    if (has("wiz-create")) {
        out.push_back({"finish the create-project wizard",
                       "the overview page of a newly created project", "wiz-create"});
    }
    if (has("issue-title") && has("issue-submit")) {
        out.push_back({"write and submit a new issue",
                       "the detail page of a freshly filed issue", "issue-submit"});
    }
    if (has("user-name") && has("user-create")) {
        out.push_back({"add a team member",
                       "the member list including a new person", "user-create"});
    }
    if (has("reset-email")) {
        out.push_back({"request a password reset link",
                       "a confirmation that the reset email was sent", "reset-send"});
    }
    if (has("nav-search")) {
        out.push_back({"search the application", "a page of search results", "nav-search-btn"});
    }
    return out;
}

DescribeResult describe_structured(const StructuredObservation& obs) {
    DescribeResult res;
    auto groups = group_elements(obs);

    std::vector<std::string> parts;
    for (const auto& g : groups) {
        parts.push_back(element_kind_name(g.kind) + "[" +
                        (g.kind == ElementKind::Link ? g.target : strip_index(g.rep_id)) +
                        "] x" + std::to_string(g.count) + " '" + g.label + "'");
    }
    res.description = "url: " + obs.url + " | route: " + obs.route + " | " + join(parts, "; ");

    std::vector<Proposal> proposals = structured_composites(obs);

    // Ids consumed by the composite flows above; no point proposing them twice.
    const std::set<std::string> composite_ids = {
        "login-user",  "login-pass",  "login-submit", "reg-user",   "reg-email",
        "reg-pass",    "reg-submit",  "wiz-name",     "wiz-slug",   "wiz-visibility",
        "wiz-continue", "wiz-desc",   "wiz-topics",   "wiz-readme", "wiz-create",
        "issue-title", "issue-body",  "issue-label",  "issue-submit", "user-name",
        "user-email",  "user-create", "reset-email",  "reset-send", "nav-search",
        "nav-search-btn"};

    bool menu_open = false;
    for (const auto& e : obs.elements) menu_open = menu_open || has_class(e, "dropdown-item");
    if (find_elem(obs, "nav-new-btn") && !menu_open) {
        proposals.push_back({"open the creation menu",
                             "the same page with the creation menu expanded", "nav-new-btn"});
    }

    std::vector<Proposal> links, widgets, externals;
    for (const auto& g : groups) {
        if (composite_ids.count(strip_index(g.rep_id))) continue;
        if (g.kind == ElementKind::Link) {
            if (g.external) {
                externals.push_back({"follow the external link '" + g.label + "'",
                                     "a boundary notice outside the application", g.rep_id});
            } else if (g.target != obs.url) {
                std::string plural = g.count > 1 ? " (" + std::to_string(g.count) + " similar)" : "";
                links.push_back({"visit one '" + g.label + "' link" + plural,
                                 "the page at " + g.target + " opened from " + obs.url,
                                 g.rep_id});
            }
        } else if (g.kind == ElementKind::Button) {
            widgets.push_back({"press the '" + g.label + "' button",
                               "the " + obs.url + " page reacting to '" + g.label + "'",
                               g.rep_id});
        } else if (g.kind == ElementKind::Select) {
            widgets.push_back({"change the '" + g.label + "' selection",
                               "the " + obs.url + " page with another '" + g.label + "' choice",
                               g.rep_id});
        } else if (g.kind == ElementKind::Checkbox) {
            widgets.push_back({"toggle '" + g.label + "'",
                               "the " + obs.url + " page with '" + g.label + "' flipped",
                               g.rep_id});
        } else {
            widgets.push_back({"type into the '" + g.label + "' field",
                               "the " + obs.url + " page with '" + g.label + "' filled in",
                               g.rep_id});
        }
    }
    proposals.insert(proposals.end(), links.begin(), links.end());
    proposals.insert(proposals.end(), widgets.begin(), widgets.end());
    proposals.push_back({"scroll to the bottom of the page",
                         "the lower sections of " + obs.url, ""});
    proposals.insert(proposals.end(), externals.begin(), externals.end());

    int rank = 0;
    for (auto& p : proposals) {
        MacroAction m;
        m.goal = std::move(p.goal);
        m.predicted_state = std::move(p.predicted);
        m.target_hint = std::move(p.hint);
        m.rank = ++rank;
        res.macros.push_back(std::move(m));
    }
    return res;
}

bool fillable_box(const GeomBox& g) {
    return g.box.y > 56 && g.box.w >= 300 && g.box.h <= 140;
}

DescribeResult describe_screen(const ScreenObservation& obs) {
    DescribeResult res;

    int fill_like = 0, button_like = 0, row_like = 0;
    for (const auto& g : obs.geometry) {
        if (fillable_box(g)) {
            ++fill_like;
        } else if (g.box.w < 300 && g.box.h >= 32 && g.box.h <= 56) {
            ++button_like;
        } else {
            ++row_like;
        }
    }
    res.description = "url: " + obs.url + " | scroll " + std::to_string(obs.scroll_y) + "/" +
                      std::to_string(obs.max_scroll) + " | boxes: " +
                      std::to_string(obs.geometry.size()) + " total, " +
                      std::to_string(fill_like) + " field-like, " +
                      std::to_string(button_like) + " button-like, " +
                      std::to_string(row_like) + " block-like";

    std::vector<Proposal> proposals;
    const std::string& url = obs.url;
    auto url_has = [&](const char* s) { return url.find(s) != std::string::npos; };

    if (url_has("/login")) {
        proposals.push_back({"fill in and submit the sign-in form",
                             "the signed-in landing page with the full navigation bar", ""});
    }
    if (url_has("/register")) {
        proposals.push_back({"complete the registration form and create an account",
                             "the signed-in landing page for a brand new account", ""});
    }
    if (url_has("/password-reset")) {
        proposals.push_back({"request a password reset link",
                             "a confirmation that the reset email was sent", ""});
    }
    if (url_has("/projects/new")) {
        proposals.push_back({"advance the project creation wizard",
                             "the overview page of a newly created project", ""});
    }
    if (url_has("/issues/new")) {
        proposals.push_back({"write and submit a new issue",
                             "the detail page of a freshly filed issue", ""});
    }
    if (url_has("/users/new")) {
        proposals.push_back({"add a team member", "the member list including a new person", ""});
    }

    // Aim at distinct visible boxes, top of the page first.
    std::vector<const GeomBox*> targets;
    for (const auto& g : obs.geometry) {
        if (g.box.w <= 640 && g.box.h <= 140) targets.push_back(&g);
    }
    std::sort(targets.begin(), targets.end(), [](const GeomBox* a, const GeomBox* b) {
        return std::pair(a->box.y, a->box.x) < std::pair(b->box.y, b->box.x);
    });
    int emitted = 0;
    for (const GeomBox* g : targets) {
        if (emitted >= 14) break;
        int cx = g->box.x + g->box.w / 2;
        int cy = g->box.y + g->box.h / 2;
        if (cy < 0 || cy >= kViewportHeight) continue;
        proposals.push_back({"click the box at (" + std::to_string(cx) + ", " +
                                 std::to_string(cy) + ")",
                             "whatever the box at (" + std::to_string(cx) + ", " +
                                 std::to_string(cy) + ") on " + url + " opens",
                             "xy:" + std::to_string(cx) + "," + std::to_string(cy)});
        ++emitted;
    }

    if (obs.scroll_y < obs.max_scroll) {
        proposals.push_back({"scroll to the bottom of the page",
                             "the lower sections of " + url, ""});
    }
    proposals.push_back({"step back to the previous page",
                         "the page visited before " + url, ""});

    int rank = 0;
    for (auto& p : proposals) {
        MacroAction m;
        m.goal = std::move(p.goal);
        m.predicted_state = std::move(p.predicted);
        m.target_hint = std::move(p.hint);
        m.rank = ++rank;
        res.macros.push_back(std::move(m));
    }
    return res;
}

}  // namespace

std::string macro_status_name(MacroAction::Status s) {
    switch (s) {
        case MacroAction::Status::Proposed: return "proposed";
        case MacroAction::Status::Executing: return "executing";
        case MacroAction::Status::Completed: return "completed";
        case MacroAction::Status::Failed: return "failed";
        case MacroAction::Status::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

DescribeResult DeterministicDescriber::describe(const AgentView& view) {
    if (view.mode == Mode::Structured) return describe_structured(*view.structured);
    return describe_screen(*view.screen);
}

DescribeResult ResilientDescriber::describe(const AgentView& view) {
    if (primary_) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            try {
                return primary_->describe(view);
            } catch (const BackendFailure&) {
            }
        }
    }
    return fallback_.describe(view);
}

}  // namespace uilab
