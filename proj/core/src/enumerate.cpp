#include "uilab/enumerate.hpp"

#include <deque>

namespace uilab {

std::vector<std::string> materializable_urls(const SiteGraph& site, const Session& ses) {
    std::vector<std::string> urls = {
        "/",        "/login",    "/register", "/password-reset", "/explore",
        "/about",   "/search",   "/dashboard", "/projects",       "/projects/new",
        "/projects/new/details", "/projects/new/confirm",         "/users",
        "/users/new", "/settings", "/help",    kBoundaryUrl,
    };
    // The logout guardrail page has no inbound link where logout is real.
    if (site.level != Level::Sparse) urls.push_back(kLogoutDisabledUrl);

    for (int n = 1; n <= site.help_chain_length; ++n) {
        urls.push_back("/help/" + std::to_string(n));
        for (const auto& t : site.help_topics) {
            urls.push_back("/help/" + std::to_string(n) + "/" + t);
        }
    }
    for (const auto& [slug, name] : site.visible_projects(ses)) {
        const std::string base = "/p/" + slug;
        urls.push_back(base);
        urls.push_back(base + "/tree");
        urls.push_back(base + "/issues");
        urls.push_back(base + "/issues/new");
        urls.push_back(base + "/mrs");
        urls.push_back(base + "/settings");
        urls.push_back(base + "/settings/delete");
        for (int id = 1; id <= site.issue_count(ses, slug); ++id) {
            urls.push_back(base + "/issues/" + std::to_string(id));
        }
        if (const SeededProject* sp = site.seeded_project(slug)) {
            urls.push_back(base + "/commits");
            for (const auto& d : sp->dirs) urls.push_back(base + "/tree/" + d);
            for (const auto& f : sp->files) {
                urls.push_back(base + "/blob/" + f.slug);
                urls.push_back(base + "/edit/" + f.slug);
            }
            for (size_t id = 1; id <= sp->merge_requests.size(); ++id) {
                urls.push_back(base + "/mrs/" + std::to_string(id));
            }
        }
    }
    for (const auto& u : site.visible_users(ses)) urls.push_back("/u/" + u);
    return urls;
}

namespace {

void scan_session(const SiteGraph& site, const Session& ses, Mode mode,
                  const std::vector<OverrideRule>& rules, std::set<FunctionalityKey>& out) {
    for (const auto& url : materializable_urls(site, ses)) {
        auto match = site.match_route(url);
        if (!match) continue;
        if (match->requires_login && !ses.logged_in) continue;
        if (ses.logged_in &&
            (match->pattern == "/login" || match->pattern == "/register" ||
             match->pattern == "/password-reset")) {
            continue;  // these redirect away for signed-in sessions
        }
        for (bool menu_open : {false, true}) {
            Session view = ses;
            view.open_menu = menu_open ? "newmenu" : "";
            auto page = build_page(site, url, view);
            if (!page) continue;
            auto keys = page_keys(*page, mode, rules);
            out.insert(keys.begin(), keys.end());
        }
    }
}

// Entities only ever add page content, so one maximal session covers every
// intermediate creation state's keys.
Session maximal_session(const SiteGraph& site) {
    Session ses = initial_session(site);
    ses.logged_in = true;
    if (ses.current_user.empty()) {
        ses.created_users.push_back("newuser");
        ses.current_user = "newuser";
    }
    if (static_cast<int>(ses.created_users.size()) < site.max_created_users) {
        ses.created_users.push_back("teammate");
    }
    if (site.max_created_projects > 0) {
        ses.created_projects.push_back({"sandbox", "sandbox"});
        if (site.max_created_issues_per_project > 0) {
            ses.extra_issues["sandbox"] = 1;
        }
    }
    return ses;
}

// Imported sites have no entity flows; reachability is the link closure from
// the landing page plus explicit navigate effects.
std::set<FunctionalityKey> custom_site_keys(const SiteGraph& site, Mode mode,
                                            const std::vector<OverrideRule>& rules) {
    std::set<FunctionalityKey> out;
    Session ses = initial_session(site);
    std::set<std::string> seen;
    std::deque<std::string> queue;
    auto enqueue = [&](const std::string& url) {
        if (url.empty()) return;
        std::string dest = resolve_destination(site, ses, url);
        if (seen.insert(dest).second) queue.push_back(dest);
    };
    enqueue(kLandingUrl);
    while (!queue.empty()) {
        std::string url = queue.front();
        queue.pop_front();
        auto it = site.static_pages.find(url);
        if (it == site.static_pages.end()) continue;
        auto keys = page_keys(it->second, mode, rules);
        out.insert(keys.begin(), keys.end());
        for (const auto& e : it->second.elements) {
            if (!e.interactive()) continue;
            if (!e.href.empty()) enqueue(e.href);
            if (e.effect == EffectKind::External || e.effect == EffectKind::Upload) {
                enqueue(kBoundaryUrl);
            }
        }
    }
    return out;
}

}  // namespace

std::set<FunctionalityKey> materializable_keys(const SiteGraph& site, const Session& session,
                                               Mode mode,
                                               const std::vector<OverrideRule>& rules) {
    std::set<FunctionalityKey> out;
    scan_session(site, session, mode, rules, out);
    return out;
}

std::set<FunctionalityKey> reachable_keys_logged_out(const SiteGraph& site, Mode mode,
                                                     const std::vector<OverrideRule>& rules) {
    Session ses = initial_session(site);
    ses.logged_in = false;
    ses.current_user.clear();
    std::set<FunctionalityKey> out;
    scan_session(site, ses, mode, rules, out);
    return out;
}

std::set<FunctionalityKey> reachable_keys(const SiteGraph& site, Mode mode,
                                          const std::vector<OverrideRule>& rules) {
    if (!site.generated) return custom_site_keys(site, mode, rules);

    std::set<FunctionalityKey> out;
    if (site.level == Level::Sparse) {
        // Bootstrap world first, then everything after registration.
        auto logged_out = reachable_keys_logged_out(site, mode, rules);
        out.insert(logged_out.begin(), logged_out.end());
    }
    scan_session(site, maximal_session(site), mode, rules, out);
    return out;
}

int enumerate_total_functionalities(const SiteGraph& site, Mode mode) {
    return static_cast<int>(reachable_keys(site, mode, site.overrides).size());
}

}  // namespace uilab
