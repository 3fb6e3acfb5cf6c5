#include <array>

#include "uilab/site.hpp"

namespace uilab {

namespace {

constexpr std::array<const char*, 10> kOrgPool = {
    "acme", "nimbus", "quartz", "violet", "orchid",
    "falcon", "harbor", "cedar", "lumen", "mosaic"};

constexpr std::array<const char*, 12> kProjectPool = {
    "atlas", "beacon", "cascade", "drift",  "ember",   "flux",
    "grove", "helix",  "iris",    "juniper", "krypton", "lattice"};

constexpr std::array<const char*, 10> kUserPool = {
    "avery", "blake", "casey",  "devon",  "ellis",
    "frankie", "gray", "harper", "indigo", "jules"};

constexpr std::array<const char*, 8> kFilePool = {
    "readme", "license", "main", "config", "changelog", "makefile", "index", "utils"};

constexpr std::array<const char*, 3> kDirPool = {"src", "docs", "ci"};

constexpr std::array<const char*, 8> kIssuePool = {
    "Fix login redirect",   "Update dependency pins", "Dark mode contrast",
    "Flaky pipeline retry", "Paginate member list",   "Improve search ranking",
    "Archive stale branches", "Clarify error banner"};

constexpr std::array<const char*, 4> kMrPool = {
    "Refactor session storage", "Add audit log", "Speed up cold start", "Tidy CI config"};

constexpr int kHelpChainLength = 34;
constexpr std::array<const char*, 5> kHelpTopics = {"basics", "setup", "usage", "faq", "tips"};

// Standard form column geometry. The deterministic screen-mode actor relies
// on fill targets being wide (w >= 300) and short-ish (h <= 140) and the
// submit button sitting below them.
constexpr int kFormX = 440;
constexpr int kFormW = 420;

std::string project_url(const std::string& slug) { return "/p/" + slug; }

struct Sketch {
    const SiteGraph& site;
    const Session& ses;
    Page page;
    int y = 88;

    Sketch(const SiteGraph& s, const Session& sess, std::string url, std::string route,
           bool requires_login)
        : site(s), ses(sess) {
        page.url = std::move(url);
        page.route = std::move(route);
        page.requires_login = requires_login;
        page.theme_class = site.themes.empty()
                               ? std::string("theme-default")
                               : site.themes[ses.theme_index % site.themes.size()];
    }

    Element& add(Element e) {
        page.elements.push_back(std::move(e));
        return page.elements.back();
    }

    Element& link(std::string id, std::string label, std::string href, std::string tmpl,
                  std::vector<std::string> classes, Rect box, int z = 0) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Link;
        e.label = std::move(label);
        e.href = std::move(href);
        e.route_template = std::move(tmpl);
        e.classes = std::move(classes);
        e.box = box;
        e.z_order = z;
        e.effect = EffectKind::Navigate;
        return add(std::move(e));
    }

    Element& external(std::string id, std::string label, std::string href, Rect box) {
        Element& e = link(std::move(id), std::move(label), std::move(href), "",
                          {"ext-link"}, box);
        e.effect = EffectKind::External;
        return e;
    }

    Element& button(std::string id, std::string label, std::vector<std::string> classes,
                    EffectKind effect, Rect box, std::string target = "", int z = 0) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Button;
        e.label = std::move(label);
        e.classes = std::move(classes);
        e.box = box;
        e.z_order = z;
        e.effect = effect;
        e.effect_target = std::move(target);
        return add(std::move(e));
    }

    Element& input(std::string id, std::string label, Rect box,
                   std::vector<std::string> classes = {"form-input"}) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Input;
        e.label = std::move(label);
        e.classes = std::move(classes);
        e.box = box;
        return add(std::move(e));
    }

    Element& textarea(std::string id, std::string label, Rect box,
                      std::vector<std::string> classes = {"form-textarea"}) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Textarea;
        e.label = std::move(label);
        e.classes = std::move(classes);
        e.box = box;
        return add(std::move(e));
    }

    Element& select(std::string id, std::string label, Rect box,
                    std::vector<std::string> classes = {"form-select"}) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Select;
        e.label = std::move(label);
        e.classes = std::move(classes);
        e.box = box;
        return add(std::move(e));
    }

    Element& checkbox(std::string id, std::string label, Rect box) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Checkbox;
        e.label = std::move(label);
        e.classes = {"checkbox"};
        e.box = box;
        return add(std::move(e));
    }

    Element& text(std::string id, std::string label, Rect box,
                  std::vector<std::string> classes = {}) {
        Element e;
        e.id = std::move(id);
        e.kind = ElementKind::Text;
        e.label = std::move(label);
        e.classes = std::move(classes);
        e.box = box;
        return add(std::move(e));
    }

    int row(int h = 44, int gap = 12) {
        int at = y;
        y += h + gap;
        return at;
    }

    void heading(const std::string& label) {
        text("page-heading", label, {240, row(40, 20), 760, 40}, {"page-title"});
    }

    void text_rows(const std::string& id_prefix, int count, int h = 60) {
        for (int i = 0; i < count; ++i) {
            text(id_prefix + "-" + std::to_string(i + 1), "", {240, row(h, 16), 960, h},
                 {"content-block"});
        }
    }

    // Inert copy, badges and spacers. Real pages are mostly non-interactive
    // nodes; these keep the click-anything baseline honest.
    void noise(const std::string& prefix, int count) {
        for (int i = 0; i < count; i += 3) {
            int ry = row(40, 10);
            for (int j = 0; j < 3 && i + j < count; ++j) {
                text(prefix + "-n" + std::to_string(i + j + 1), "",
                     {240 + j * 330, ry, 300, 40}, {"meta"});
            }
        }
    }

    // Standard form widgets in the shared column.
    Element& form_input(std::string id, std::string label) {
        return input(std::move(id), std::move(label), {kFormX, row(36, 16), kFormW, 36});
    }
    Element& form_textarea(std::string id, std::string label) {
        return textarea(std::move(id), std::move(label), {kFormX, row(120, 16), kFormW, 120});
    }
    Element& form_select(std::string id, std::string label) {
        return select(std::move(id), std::move(label), {kFormX, row(36, 16), kFormW, 36});
    }
    Element& form_checkbox(std::string id, std::string label) {
        return checkbox(std::move(id), std::move(label), {kFormX, row(20, 16), 20, 20});
    }
    Element& form_submit(std::string id, std::string label, EffectKind effect,
                         std::string target = "") {
        return button(std::move(id), std::move(label), {"btn", "btn-primary"}, effect,
                      {kFormX, row(40, 16), 160, 40}, std::move(target));
    }

    Page finish(int min_height = kViewportHeight) {
        page.content_height = std::max({min_height, y + 40, kViewportHeight});
        return std::move(page);
    }
};

void add_nav(Sketch& sk) {
    const SiteGraph& site = sk.site;
    const Session& ses = sk.ses;

    // Present in the DOM for assistive navigation but never rendered.
    Element& skip = sk.link("skip-link", "Skip to content", "#main", "", {"sr-only"}, {0, 0, 0, 0});
    skip.effect = EffectKind::None;

    sk.link("nav-brand", "DevForge", "/", "/", {"nav-brand"}, {16, 12, 110, 32}, 5);

    if (ses.logged_in) {
        sk.input("nav-search", "Search DevForge", {150, 14, 220, 28}, {"nav-search"}).z_order = 5;
        sk.button("nav-search-btn", "Search", {"btn-icon", "icon-search"}, EffectKind::SearchSubmit,
                  {376, 14, 48, 28}, "", 5);
        sk.button("nav-new-btn", "+ New", {"nav-new-btn"}, EffectKind::ToggleMenu,
                  {440, 14, 72, 28}, "newmenu", 5);
        sk.link("nav-dashboard", "Dashboard", "/dashboard", "/dashboard", {"nav-link"},
                {540, 14, 104, 28}, 5);
        sk.link("nav-projects", "Projects", "/projects", "/projects", {"nav-link"},
                {652, 14, 88, 28}, 5);
        sk.link("nav-users", "People", "/users", "/users", {"nav-link"}, {748, 14, 72, 28}, 5);
        sk.link("nav-settings", "Settings", "/settings", "/settings", {"nav-icon", "icon-gear"},
                {1080, 14, 40, 28}, 5);
        if (!ses.current_user.empty()) {
            sk.link("nav-avatar", ses.current_user, "/u/" + ses.current_user, "/u/{user}",
                    {"nav-avatar"}, {1128, 14, 40, 28}, 5);
        }
        sk.button("nav-logout", "Sign out", {"btn-logout"}, EffectKind::Logout,
                  {1176, 14, 96, 28}, "", 5);

        if (ses.open_menu == "newmenu") {
            auto projects = site.visible_projects(ses);
            sk.link("menu-new-project", "New project", "/projects/new", "/projects/new",
                    {"dropdown-item"}, {440, 48, 190, 36}, 10);
            Element& ni = sk.link("menu-new-issue", "New issue",
                                  projects.empty() ? "" : project_url(projects.front().first) + "/issues/new",
                                  "/p/{project}/issues/new", {"dropdown-item"}, {440, 88, 190, 36}, 10);
            if (projects.empty()) ni.enabled = false;
            sk.link("menu-new-user", "New user", "/users/new", "/users/new", {"dropdown-item"},
                    {440, 128, 190, 36}, 10);
        }
    } else {
        sk.link("nav-explore", "Explore", "/explore", "/explore", {"nav-link"}, {960, 14, 80, 28}, 5);
        sk.link("nav-signin", "Sign in", "/login", "/login", {"nav-link"}, {1060, 14, 80, 28}, 5);
        sk.link("nav-register", "Register", "/register", "/register", {"nav-link", "register-cta"},
                {1150, 14, 90, 28}, 5);
    }
}

// Help deliberately comes last so depth-first link harvesting dives into the
// documentation subtree before anything else.
void add_footer(Sketch& sk) {
    int fy = sk.row(28, 8);
    sk.link("footer-about", "About", "/about", "/about", {"footer-link"}, {240, fy, 80, 28});
    sk.external("footer-status", "Status", "https://status.devforge.example", {340, fy, 80, 28});
    sk.link("footer-help", "Help", "/help", "/help", {"footer-link"}, {440, fy, 80, 28});
}

Page build_landing(Sketch sk) {
    add_nav(sk);
    if (sk.ses.logged_in) {
        sk.heading("Welcome back, " + sk.ses.current_user);
        int cy = sk.row(96, 20);
        sk.link("card-projects", "View projects", "/projects", "/projects", {"card-link"},
                {240, cy, 300, 96});
        sk.link("card-new-project", "New project", "/projects/new", "/projects/new",
                {"btn", "btn-new"}, {560, cy, 300, 96});
        sk.link("card-users", "Team members", "/users", "/users", {"card-link"},
                {880, cy, 300, 96});
        auto projects = sk.site.visible_projects(sk.ses);
        for (size_t i = 0; i < projects.size() && i < 3; ++i) {
            sk.link("recent-project-" + std::to_string(i + 1), projects[i].second,
                    project_url(projects[i].first), "/p/{project}", {"project-link"},
                    {240, sk.row(44, 8), 520, 44});
        }
        Element& kbd = sk.link("kbd-shortcuts", "Keyboard shortcuts", "/help", "/help",
                               {"sr-only"}, {0, 0, 0, 0});
        kbd.effect = EffectKind::Navigate;
        sk.text_rows("activity", 6);
        sk.noise("home", 24);
    } else {
        sk.heading("DevForge");
        sk.text("hero-copy", "Plan, build and ship together.", {240, sk.row(60, 16), 760, 60},
                {"hero"});
        int cy = sk.row(48, 20);
        sk.link("cta-signin", "Sign in", "/login", "/login", {"btn", "btn-primary"},
                {240, cy, 160, 48});
        sk.link("cta-register", "Register now", "/register", "/register", {"btn", "btn-cta"},
                {420, cy, 180, 48});
        sk.link("cta-explore", "Explore public projects", "/explore", "/explore", {"card-link"},
                {240, sk.row(56, 16), 360, 56});
        sk.text_rows("hero-detail", 4);
        sk.noise("home", 15);
    }
    add_footer(sk);
    return sk.finish(1100);
}

Page build_login(Sketch sk) {
    add_nav(sk);
    sk.heading("Sign in");
    sk.form_input("login-user", "Username");
    sk.form_input("login-pass", "Password");
    sk.form_submit("login-submit", "Sign in", EffectKind::SubmitLogin);
    sk.link("login-forgot", "Forgot your password?", "/password-reset", "/password-reset",
            {"form-link"}, {kFormX, sk.row(28, 8), 220, 28});
    sk.link("login-register", "Register for DevForge", "/register", "/register", {"form-link"},
            {kFormX, sk.row(28, 8), 220, 28});
    sk.noise("login", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_register(Sketch sk) {
    add_nav(sk);
    sk.heading("Register");
    sk.form_input("reg-user", "Username");
    sk.form_input("reg-email", "Email");
    sk.form_input("reg-pass", "Password");
    sk.form_submit("reg-submit", "Create account", EffectKind::SubmitRegister);
    sk.link("reg-signin", "Already have an account? Sign in", "/login", "/login", {"form-link"},
            {kFormX, sk.row(28, 8), 260, 28});
    sk.noise("register", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_password_reset(Sketch sk) {
    add_nav(sk);
    sk.heading("Reset password");
    sk.form_input("reset-email", "Email");
    sk.form_submit("reset-send", "Send reset link", EffectKind::Transient);
    sk.link("reset-back", "Back to sign in", "/login", "/login", {"form-link"},
            {kFormX, sk.row(28, 8), 200, 28});
    sk.noise("reset", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_explore(Sketch sk) {
    add_nav(sk);
    sk.heading("Explore projects");
    if (!sk.ses.logged_in) {
        sk.link("explore-register", "Register now", "/register", "/register", {"btn", "btn-cta"},
                {240, sk.row(48, 16), 180, 48});
    }
    int shown = 0;
    for (const auto& p : sk.site.projects) {
        if (!p.is_public || sk.site.project_deleted(sk.ses, p.slug)) continue;
        sk.link("explore-project-" + std::to_string(++shown), p.name, project_url(p.slug),
                "/p/{project}", {"project-link"}, {240, sk.row(44, 8), 520, 44});
    }
    if (shown == 0) {
        sk.text("explore-empty", "No public projects yet.", {240, sk.row(44, 8), 520, 44});
    }
    sk.text_rows("explore-copy", 2);
    sk.noise("explore", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_about(Sketch sk) {
    add_nav(sk);
    sk.heading("About DevForge");
    sk.text_rows("about-copy", 3);
    sk.external("about-community", "Community forum", "https://community.devforge.example",
                {240, sk.row(28, 12), 220, 28});
    sk.external("about-source", "Source mirror", "https://src.devforge.example",
                {240, sk.row(28, 12), 220, 28});
    sk.noise("about", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_search(Sketch sk) {
    add_nav(sk);
    sk.heading("Search");
    sk.input("search-refine", "Refine query", {240, sk.row(36, 16), 420, 36},
             {"form-input", "input-filter"});
    sk.button("search-go", "Search", {"btn", "btn-search"}, EffectKind::SearchSubmit,
              {680, sk.y - 52, 120, 36});
    int shown = 0;
    for (const auto& [slug, name] : sk.site.visible_projects(sk.ses)) {
        sk.link("search-result-" + std::to_string(++shown), name, project_url(slug),
                "/p/{project}", {"result-link"}, {240, sk.row(44, 8), 520, 44});
    }
    if (shown == 0) {
        sk.text("search-empty", "Nothing matched.", {240, sk.row(44, 8), 520, 44});
    }
    sk.noise("search", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_dashboard(Sketch sk) {
    add_nav(sk);
    sk.heading("Dashboard");
    sk.text_rows("stat", 2, 48);
    int cy = sk.row(56, 16);
    sk.link("dash-projects", "All projects", "/projects", "/projects", {"dash-link"},
            {240, cy, 240, 56});
    sk.link("dash-new-project", "New project", "/projects/new", "/projects/new",
            {"btn", "btn-new"}, {500, cy, 240, 56});
    sk.link("dash-users", "People", "/users", "/users", {"dash-link"}, {760, cy, 220, 56});
    sk.link("dash-settings", "Preferences", "/settings", "/settings", {"dash-link"},
            {1000, cy, 220, 56});
    sk.link("dash-explore", "Explore", "/explore", "/explore", {"dash-link"},
            {240, sk.row(56, 16), 220, 56});
    sk.form_checkbox("dash-hide-done", "Hide done items");
    auto projects = sk.site.visible_projects(sk.ses);
    for (size_t i = 0; i < projects.size() && i < 3; ++i) {
        sk.link("dash-recent-" + std::to_string(i + 1), projects[i].second,
                project_url(projects[i].first), "/p/{project}", {"project-link"},
                {240, sk.row(44, 8), 520, 44});
    }
    sk.text_rows("dash-activity", 8);
    sk.noise("dash", 36);
    add_footer(sk);
    return sk.finish(1540);
}

Page build_projects(Sketch sk) {
    add_nav(sk);
    sk.heading("Projects");
    int ty = sk.row(36, 16);
    sk.link("projects-new", "New project", "/projects/new", "/projects/new", {"btn", "btn-new"},
            {1040, ty, 160, 36});
    sk.input("projects-filter", "Filter by name", {240, ty, 320, 36},
             {"form-input", "input-filter"});
    sk.select("projects-sort", "Sort", {580, ty, 180, 36});
    auto projects = sk.site.visible_projects(sk.ses);
    int i = 0;
    for (const auto& [slug, name] : projects) {
        int ry = sk.row(48, 8);
        sk.link("project-row-" + std::to_string(i + 1), name, project_url(slug), "/p/{project}",
                {"project-link"}, {240, ry, 480, 48});
        // Two icon sizes on purpose; the override list folds them together.
        sk.button("star-" + std::to_string(i + 1), "Star",
                  {"btn-icon", i % 2 ? "icon-star-24" : "icon-star-16"}, EffectKind::Transient,
                  {760, ry + 8, 32, 32});
        const SeededProject* sp = sk.site.seeded_project(slug);
        sk.text("visibility-" + std::to_string(i + 1), sp && sp->is_public ? "public" : "private",
                {820, ry + 8, 100, 32}, {"badge"});
        ++i;
    }
    if (projects.empty()) {
        sk.text("projects-empty", "No projects yet. Create one to get started.",
                {240, sk.row(48, 8), 620, 48});
    }
    sk.noise("projects", 12);
    add_footer(sk);
    return sk.finish();
}

Page build_wizard_step1(Sketch sk) {
    add_nav(sk);
    sk.heading("New project - step 1 of 3");
    sk.form_input("wiz-name", "Project name");
    sk.form_input("wiz-slug", "Project slug (optional)");
    sk.form_select("wiz-visibility", "Visibility");
    sk.form_submit("wiz-continue", "Continue", EffectKind::WizardContinue,
                   "/projects/new/details");
    sk.link("wiz-cancel", "Cancel", "/projects", "/projects", {"cancel-link"},
            {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("wiz", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_wizard_step2(Sketch sk) {
    add_nav(sk);
    sk.heading("New project - step 2 of 3");
    sk.form_textarea("wiz-desc", "Description");
    sk.form_input("wiz-topics", "Topics (comma separated)");
    sk.form_checkbox("wiz-readme", "Initialize with a README");
    sk.form_submit("wiz-continue", "Continue", EffectKind::WizardContinue,
                   "/projects/new/confirm");
    sk.link("wiz-back1", "Back", "/projects/new", "/projects/new", {"cancel-link"},
            {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("wiz", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_wizard_step3(Sketch sk) {
    add_nav(sk);
    sk.heading("New project - step 3 of 3");
    sk.text("wiz-summary-name", "Name: " + sk.ses.wizard.name, {kFormX, sk.row(32, 8), 500, 32});
    sk.text("wiz-summary-visibility", "Visibility: " +
            (sk.ses.wizard.visibility.empty() ? std::string("private") : sk.ses.wizard.visibility),
            {kFormX, sk.row(32, 8), 500, 32});
    sk.text("wiz-summary-desc", "About: " + sk.ses.wizard.description,
            {kFormX, sk.row(32, 8), 500, 32});
    sk.form_submit("wiz-create", "Create project", EffectKind::WizardCreate);
    sk.link("wiz-back2", "Back", "/projects/new/details", "/projects/new/details",
            {"cancel-link"}, {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("wiz", 6);
    add_footer(sk);
    return sk.finish();
}

struct ProjectView {
    std::string slug;
    std::string name;
    const SeededProject* seeded = nullptr;  // null for session-created projects
};

std::optional<ProjectView> resolve_project(const SiteGraph& site, const Session& ses,
                                           const std::string& slug) {
    if (site.project_deleted(ses, slug)) return std::nullopt;
    if (const SeededProject* p = site.seeded_project(slug)) {
        return ProjectView{slug, p->name, p};
    }
    for (const auto& cp : ses.created_projects) {
        if (cp.slug == slug) return ProjectView{slug, cp.name, nullptr};
    }
    return std::nullopt;
}

void add_project_tabs(Sketch& sk, const ProjectView& pv) {
    const std::string base = project_url(pv.slug);
    int ty = sk.row(36, 20);
    sk.link("tab-files", "Files", base + "/tree", "/p/{project}/tree", {"tab-link"},
            {240, ty, 100, 36});
    sk.link("tab-issues", "Issues", base + "/issues", "/p/{project}/issues", {"tab-link"},
            {350, ty, 100, 36});
    sk.link("tab-mrs", "Merge requests", base + "/mrs", "/p/{project}/mrs", {"tab-link"},
            {460, ty, 150, 36});
    if (pv.seeded) {
        sk.link("tab-commits", "Commits", base + "/commits", "/p/{project}/commits",
                {"tab-link"}, {620, ty, 110, 36});
    }
    sk.link("tab-settings", "Settings", base + "/settings", "/p/{project}/settings",
            {"tab-link"}, {740, ty, 110, 36});
}

Page build_project_overview(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    sk.heading(pv.name);
    add_project_tabs(sk, pv);
    int ay = sk.row(36, 20);
    sk.button("proj-star", "Star", {"btn-icon", "icon-star-24"}, EffectKind::Transient,
              {240, ay, 80, 36});
    sk.button("clone-btn", "Clone", {"btn", "btn-clone"}, EffectKind::Transient,
              {340, ay, 100, 36});
    if (pv.seeded) {
        sk.text_rows("readme", 6);
    } else {
        sk.text("quickstart", "This project is empty. Push your first commit to begin.",
                {240, sk.row(60, 16), 760, 60});
        sk.text_rows("quickstart-detail", 2);
    }
    sk.noise("proj", 24);
    add_footer(sk);
    return sk.finish(1200);
}

Page build_project_tree(Sketch sk, const ProjectView& pv, const std::string& dir) {
    add_nav(sk);
    const std::string base = project_url(pv.slug);
    sk.heading(pv.name + " / files" + (dir.empty() ? "" : " / " + dir));
    sk.link("crumb-project", pv.name, base, "/p/{project}", {"crumb-link"},
            {240, sk.row(28, 12), 300, 28});
    if (!dir.empty()) {
        sk.link("crumb-tree", "repository root", base + "/tree", "/p/{project}/tree",
                {"crumb-link"}, {240, sk.row(28, 12), 300, 28});
    }
    int shown = 0;
    if (pv.seeded) {
        if (dir.empty()) {
            for (const auto& d : pv.seeded->dirs) {
                sk.link("dir-" + std::to_string(++shown), d + "/", base + "/tree/" + d,
                        "/p/{project}/tree/{dir}", {"dir-link"}, {240, sk.row(40, 6), 520, 40});
            }
        }
        for (const auto& f : pv.seeded->files) {
            if (f.dir != dir) continue;
            sk.link("file-" + std::to_string(++shown), f.title, base + "/blob/" + f.slug,
                    "/p/{project}/blob/{file}", {"file-link"}, {240, sk.row(40, 6), 520, 40});
        }
    }
    if (shown == 0) {
        sk.text("tree-empty", "No files here yet.", {240, sk.row(48, 8), 520, 48});
    }
    sk.noise("tree", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_blob(Sketch sk, const ProjectView& pv, const SeededFile& file) {
    add_nav(sk);
    const std::string base = project_url(pv.slug);
    sk.heading(pv.name + " / " + file.title);
    sk.link("crumb-tree", "files", base + "/tree", "/p/{project}/tree", {"crumb-link"},
            {240, sk.row(28, 12), 200, 28});
    int by = sk.row(36, 16);
    sk.button("blob-raw", "Raw", {"btn", "btn-raw"}, EffectKind::Transient, {240, by, 80, 36});
    sk.button("blob-copy", "Copy path", {"btn-icon", "icon-copy"}, EffectKind::Transient,
              {330, by, 40, 36});
    sk.link("blob-history", "History", base + "/commits", "/p/{project}/commits", {"hist-link"},
            {390, by, 100, 36});
    sk.link("blob-edit", "Edit", base + "/edit/" + file.slug, "/p/{project}/edit/{file}",
            {"btn", "btn-edit"}, {510, by, 80, 36});
    sk.text_rows("blob-content", 10, 90);
    sk.noise("blob", 15);
    add_footer(sk);
    return sk.finish(1800);
}

Page build_edit(Sketch sk, const ProjectView& pv, const SeededFile& file) {
    add_nav(sk);
    const std::string base = project_url(pv.slug);
    sk.heading("Editing " + file.title);
    sk.textarea("edit-content", "File contents", {240, sk.row(360, 16), 960, 360},
                {"form-textarea", "editor"});
    sk.form_input("edit-msg", "Commit message");
    sk.form_submit("edit-commit", "Commit changes", EffectKind::Transient);
    sk.link("edit-cancel", "Cancel", base + "/blob/" + file.slug, "/p/{project}/blob/{file}",
            {"cancel-link"}, {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("edit", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_commits(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    sk.heading(pv.name + " / commits");
    sk.link("crumb-project", pv.name, project_url(pv.slug), "/p/{project}", {"crumb-link"},
            {240, sk.row(28, 12), 300, 28});
    sk.text_rows("commit", 8, 48);
    sk.button("commits-more", "Load more", {"btn", "btn-more"}, EffectKind::Transient,
              {240, sk.row(40, 16), 140, 40});
    sk.noise("commits", 12);
    add_footer(sk);
    return sk.finish();
}

Page build_issues(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    const std::string base = project_url(pv.slug);
    sk.heading(pv.name + " / issues");
    int ty = sk.row(36, 16);
    sk.link("issues-new", "New issue", base + "/issues/new", "/p/{project}/issues/new",
            {"btn", "btn-new-issue"}, {1040, ty, 160, 36});
    sk.input("issues-filter", "Filter issues", {240, ty, 320, 36},
             {"form-input", "input-filter"});
    sk.select("issues-state", "State", {580, ty, 160, 36});
    const int total = sk.site.issue_count(sk.ses, pv.slug);
    for (int id = 1; id <= total; ++id) {
        std::string title = pv.seeded && id <= static_cast<int>(pv.seeded->issues.size())
                                ? pv.seeded->issues[id - 1].title
                                : "Issue #" + std::to_string(id);
        sk.link("issue-row-" + std::to_string(id), title,
                base + "/issues/" + std::to_string(id), "/p/{project}/issues/{id}",
                {"issue-link"}, {240, sk.row(44, 8), 620, 44});
    }
    if (total == 0) {
        sk.text("issues-empty", "No issues yet.", {240, sk.row(44, 8), 520, 44});
    }
    sk.noise("issues", 12);
    add_footer(sk);
    return sk.finish();
}

Page build_issue_new(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    sk.heading("New issue in " + pv.name);
    sk.form_input("issue-title", "Title");
    sk.form_textarea("issue-body", "Description");
    sk.form_select("issue-label", "Label");
    sk.form_submit("issue-submit", "Create issue", EffectKind::CreateIssue, pv.slug);
    sk.link("issue-cancel", "Cancel", project_url(pv.slug) + "/issues", "/p/{project}/issues",
            {"cancel-link"}, {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("issue", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_issue_detail(Sketch sk, const ProjectView& pv, int id) {
    add_nav(sk);
    std::string title = pv.seeded && id <= static_cast<int>(pv.seeded->issues.size())
                            ? pv.seeded->issues[id - 1].title
                            : "Issue #" + std::to_string(id);
    sk.heading(title);
    sk.link("crumb-issues", "all issues", project_url(pv.slug) + "/issues",
            "/p/{project}/issues", {"crumb-link"}, {240, sk.row(28, 12), 200, 28});
    sk.text_rows("issue-body", 3);
    sk.form_checkbox("issue-subscribe", "Notify me about updates");
    sk.form_select("issue-labels", "Labels");
    sk.form_textarea("comment-body", "Write a comment");
    sk.form_submit("comment-submit", "Comment", EffectKind::Transient);
    sk.noise("issue", 12);
    add_footer(sk);
    return sk.finish();
}

Page build_mrs(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    const std::string base = project_url(pv.slug);
    sk.heading(pv.name + " / merge requests");
    sk.input("mrs-filter", "Filter merge requests", {240, sk.row(36, 16), 320, 36},
             {"form-input", "input-filter"});
    int n = pv.seeded ? static_cast<int>(pv.seeded->merge_requests.size()) : 0;
    for (int id = 1; id <= n; ++id) {
        sk.link("mr-row-" + std::to_string(id), pv.seeded->merge_requests[id - 1],
                base + "/mrs/" + std::to_string(id), "/p/{project}/mrs/{id}", {"mr-link"},
                {240, sk.row(44, 8), 620, 44});
    }
    if (n == 0) {
        sk.text("mrs-empty", "No merge requests. Push a branch to open one.",
                {240, sk.row(44, 8), 620, 44});
    }
    sk.noise("mrs", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_mr_detail(Sketch sk, const ProjectView& pv, int id) {
    add_nav(sk);
    sk.heading(pv.seeded->merge_requests[id - 1]);
    sk.link("crumb-mrs", "all merge requests", project_url(pv.slug) + "/mrs",
            "/p/{project}/mrs", {"crumb-link"}, {240, sk.row(28, 12), 240, 28});
    int by = sk.row(40, 16);
    sk.button("mr-merge", "Merge", {"btn", "btn-merge"}, EffectKind::Transient,
              {240, by, 110, 40});
    sk.button("mr-close", "Close", {"btn", "btn-close"}, EffectKind::Transient,
              {370, by, 110, 40});
    sk.text_rows("mr-diff", 6, 90);
    sk.form_textarea("comment-body", "Write a comment");
    sk.form_submit("comment-submit", "Comment", EffectKind::Transient);
    sk.noise("mr", 12);
    add_footer(sk);
    return sk.finish(1500);
}

Page build_project_settings(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    sk.heading(pv.name + " / settings");
    sk.form_input("proj-name", "Project name");
    sk.form_textarea("proj-desc", "Description");
    sk.form_select("proj-visibility", "Visibility");
    sk.form_checkbox("proj-archive", "Archive this project");
    sk.form_submit("proj-save", "Save changes", EffectKind::Transient);
    Element& exp = sk.button("proj-export", "Export data", {"btn", "btn-export"},
                             EffectKind::None, {kFormX, sk.row(40, 16), 160, 40});
    exp.enabled = false;  // export backend intentionally absent
    sk.link("proj-delete", "Delete project", project_url(pv.slug) + "/settings/delete",
            "/p/{project}/settings/delete", {"btn", "btn-danger"},
            {kFormX, sk.row(40, 16), 180, 40});
    sk.noise("psettings", 9);
    add_footer(sk);
    return sk.finish(1500);
}

Page build_project_delete(Sketch sk, const ProjectView& pv) {
    add_nav(sk);
    sk.heading("Delete " + pv.name);
    sk.text("delete-warning", "This action permanently removes the project. Type the project "
            "name to confirm.", {240, sk.row(60, 16), 760, 60});
    sk.form_input("delete-confirm", "Project name");
    sk.form_submit("delete-submit", "Delete permanently", EffectKind::DeleteProject, pv.slug);
    sk.link("delete-cancel", "Cancel", project_url(pv.slug) + "/settings",
            "/p/{project}/settings", {"cancel-link"}, {kFormX + 200, sk.y - 56, 100, 28});
    sk.noise("delete", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_users(Sketch sk) {
    add_nav(sk);
    sk.heading("People");
    sk.link("users-new", "New user", "/users/new", "/users/new", {"btn", "btn-new-user"},
            {1040, sk.row(36, 16), 160, 36});
    int i = 0;
    for (const auto& u : sk.site.visible_users(sk.ses)) {
        sk.link("user-row-" + std::to_string(++i), u, "/u/" + u, "/u/{user}", {"user-link"},
                {240, sk.row(44, 8), 400, 44});
    }
    if (i == 0) {
        sk.text("users-empty", "No members yet.", {240, sk.row(44, 8), 400, 44});
    }
    sk.noise("users", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_user_new(Sketch sk) {
    add_nav(sk);
    sk.heading("New user");
    sk.form_input("user-name", "Username");
    sk.form_input("user-email", "Email");
    sk.form_submit("user-create", "Create user", EffectKind::CreateUser);
    sk.link("user-cancel", "Cancel", "/users", "/users", {"cancel-link"},
            {kFormX + 180, sk.y - 56, 100, 28});
    sk.noise("member", 6);
    add_footer(sk);
    return sk.finish();
}

Page build_profile(Sketch sk, const std::string& user) {
    add_nav(sk);
    sk.heading(user);
    sk.text_rows("profile-bio", 2);
    sk.button("follow-btn", "Follow", {"btn", "btn-follow"}, EffectKind::Transient,
              {240, sk.row(40, 16), 110, 40});
    sk.link("profile-projects", "View projects", "/projects", "/projects", {"profile-link"},
            {370, sk.y - 56, 160, 40});
    sk.noise("profile", 9);
    add_footer(sk);
    return sk.finish();
}

Page build_user_settings(Sketch sk) {
    add_nav(sk);
    sk.heading("Preferences");
    sk.form_input("settings-name", "Display name");
    sk.form_input("settings-email", "Email");
    sk.form_checkbox("settings-notify", "Email notifications");
    Element& theme = sk.form_select("theme-select", "Theme");
    theme.classes = {"form-select", "select-theme"};
    theme.effect = EffectKind::ThemeCycle;
    sk.form_submit("settings-save", "Save preferences", EffectKind::Transient);
    sk.button("avatar-upload", "Upload avatar", {"btn", "btn-upload"}, EffectKind::Upload,
              {kFormX, sk.row(40, 16), 160, 40});
    sk.noise("usettings", 9);
    add_footer(sk);
    return sk.finish(1200);
}

Page build_help_hub(Sketch sk) {
    add_nav(sk);
    sk.heading("Help center");
    sk.text_rows("help-intro", 2);
    sk.link("help-start", "Start with the guide", "/help/1", "/help/{n}", {"help-start"},
            {240, sk.row(48, 16), 300, 48});
    add_footer(sk);
    return sk.finish();
}

// Documentation pages carry no site chrome: a long read with topic links, a
// home link and the next chapter last. Their height forces a full scroll
// before a breadth/depth crawler moves on, which is what makes the subtree
// expensive to exhaust.
Page build_help_chapter(Sketch sk, int n) {
    sk.heading("Guide, chapter " + std::to_string(n));
    sk.text_rows("doc", 9, 330);
    sk.noise("doc", 15);
    int i = 0;
    for (const auto& t : sk.site.help_topics) {
        sk.link("help-topic-" + std::to_string(++i), "In depth: " + t,
                "/help/" + std::to_string(n) + "/" + t, "/help/{n}/{topic}",
                {"help-topic-link"}, {240, sk.row(32, 8), 340, 32});
    }
    sk.link("help-home", "Help home", "/help", "/help", {"help-home"},
            {240, sk.row(28, 8), 160, 28});
    if (n < sk.site.help_chain_length) {
        sk.link("help-next", "Next chapter", "/help/" + std::to_string(n + 1), "/help/{n}",
                {"help-next"}, {240, sk.row(32, 8), 200, 32});
    }
    return sk.finish(4320);
}

Page build_help_topic(Sketch sk, int n, const std::string& topic) {
    sk.heading("Chapter " + std::to_string(n) + ": " + topic);
    sk.text_rows("doc", 9, 330);
    sk.noise("doc", 15);
    Element& vote = sk.button("help-vote", "Was this helpful?",
                              {"btn", "shade-" + std::to_string(1 + n % 5)},
                              EffectKind::Transient, {240, sk.row(36, 12), 180, 36});
    (void)vote;
    sk.link("help-back", "Back to chapter", "/help/" + std::to_string(n), "/help/{n}",
            {"help-back"}, {240, sk.row(28, 8), 200, 28});
    return sk.finish(4320);
}

Page build_boundary(Sketch sk) {
    sk.text("boundary-message",
            "You have reached the edge of the sandbox. The action is considered successful.",
            {240, sk.row(80, 24), 800, 80}, {"notice"});
    int by = sk.row(44, 16);
    sk.button("boundary-home", "Home", {"btn", "btn-home"}, EffectKind::Navigate, {240, by, 120, 44},
              "/");
    sk.button("boundary-back", "Go back", {"btn", "btn-back"}, EffectKind::NavigateBack,
              {380, by, 120, 44});
    return sk.finish();
}

Page build_logout_disabled(Sketch sk) {
    sk.text("logoutd-message", "Signing out is disabled in this workspace.",
            {240, sk.row(80, 24), 800, 80}, {"notice"});
    int by = sk.row(44, 16);
    sk.button("logoutd-home", "Home", {"btn", "btn-home"}, EffectKind::Navigate,
              {240, by, 120, 44}, "/");
    sk.button("logoutd-back", "Go back", {"btn", "btn-back"}, EffectKind::NavigateBack,
              {380, by, 120, 44});
    return sk.finish();
}

}  // namespace

std::string level_name(Level l) {
    switch (l) {
        case Level::Abundant: return "abundant";
        case Level::Moderate: return "moderate";
        case Level::Sparse: return "sparse";
    }
    return "?";
}

Level parse_level(std::string_view s) {
    std::string l = lower(s);
    if (l == "abundant") return Level::Abundant;
    if (l == "moderate") return Level::Moderate;
    if (l == "sparse") return Level::Sparse;
    throw ConfigError("unknown level: " + std::string(s));
}

std::optional<RouteMatch> SiteGraph::match_route(const std::string& url) const {
    const auto segs = split(url, '/');
    for (const auto& route : routes) {
        const auto pat = split(route.pattern, '/');
        if (pat.size() != segs.size()) continue;
        std::map<std::string, std::string> params;
        bool ok = true;
        for (size_t i = 0; i < pat.size(); ++i) {
            if (pat[i].size() > 2 && pat[i].front() == '{' && pat[i].back() == '}') {
                if (segs[i].empty()) {
                    ok = false;
                    break;
                }
                params[pat[i].substr(1, pat[i].size() - 2)] = segs[i];
            } else if (pat[i] != segs[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return RouteMatch{route.pattern, std::move(params), route.requires_login};
    }
    return std::nullopt;
}

const SeededProject* SiteGraph::seeded_project(const std::string& slug) const {
    for (const auto& p : projects) {
        if (p.slug == slug) return &p;
    }
    return nullptr;
}

std::vector<std::pair<std::string, std::string>> SiteGraph::visible_projects(
    const Session& s) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : projects) {
        if (!project_deleted(s, p.slug)) out.emplace_back(p.slug, p.name);
    }
    for (const auto& cp : s.created_projects) {
        if (!project_deleted(s, cp.slug)) out.emplace_back(cp.slug, cp.name);
    }
    return out;
}

std::vector<std::string> SiteGraph::visible_users(const Session& s) const {
    std::vector<std::string> out = users;
    out.insert(out.end(), s.created_users.begin(), s.created_users.end());
    return out;
}

int SiteGraph::issue_count(const Session& s, const std::string& slug) const {
    int n = 0;
    if (const SeededProject* p = seeded_project(slug)) n = static_cast<int>(p->issues.size());
    auto it = s.extra_issues.find(slug);
    if (it != s.extra_issues.end()) n += it->second;
    return n;
}

SiteGraph generate_site(Level level, uint64_t seed) {
    SiteGraph site;
    site.level = level;
    site.seed = seed;
    site.generated = true;
    site.themes = {"theme-indigo", "theme-rose"};
    site.overrides = {{"icon-star-*", "icon-star"}, {"shade-*", "shade"}};
    site.help_chain_length = kHelpChainLength;
    site.help_topics.assign(kHelpTopics.begin(), kHelpTopics.end());

    // Literal segments must precede parameter segments where both could
    // match ("/issues/new" vs "/issues/{id}"); matching is first-hit.
    site.routes = {
        {"/", false},
        {"/login", false},
        {"/register", false},
        {"/password-reset", false},
        {"/explore", false},
        {"/about", false},
        {"/help", false},
        {"/help/{n}", false},
        {"/help/{n}/{topic}", false},
        {kBoundaryUrl, false},
        {kLogoutDisabledUrl, false},
        {"/search", true},
        {"/dashboard", true},
        {"/projects/new/details", true},
        {"/projects/new/confirm", true},
        {"/projects/new", true},
        {"/projects", true},
        {"/p/{project}/tree/{dir}", true},
        {"/p/{project}/tree", true},
        {"/p/{project}/blob/{file}", true},
        {"/p/{project}/edit/{file}", true},
        {"/p/{project}/commits", true},
        {"/p/{project}/issues/new", true},
        {"/p/{project}/issues/{id}", true},
        {"/p/{project}/issues", true},
        {"/p/{project}/mrs/{id}", true},
        {"/p/{project}/mrs", true},
        {"/p/{project}/settings/delete", true},
        {"/p/{project}/settings", true},
        {"/users/new", true},
        {"/users", true},
        {"/u/{user}", true},
        {"/settings", true},
    };

    Rng rng(seed ^ 0x5157e8f3u);

    if (level != Level::Sparse) {
        const int n_users = rng.range(4, 6);
        for (int i = 0; i < n_users; ++i) {
            site.users.push_back(std::string(kUserPool[(i + rng.range(0, 2)) % kUserPool.size()]) +
                                 "-" + std::to_string(i + 1));
        }
    }

    if (level == Level::Abundant) {
        const int n_projects = rng.range(8, 10);
        for (int i = 0; i < n_projects; ++i) {
            SeededProject p;
            std::string org = kOrgPool[rng.below(kOrgPool.size())];
            std::string word = kProjectPool[i % kProjectPool.size()];
            p.slug = org + "-" + word;
            p.name = org + " / " + word;
            p.is_public = i < (n_projects + 1) / 2;
            int n_root = 2;
            for (int f = 0; f < n_root; ++f) {
                size_t fi = (f + rng.range(0, 3)) % kFilePool.size();
                p.files.push_back({std::string(kFilePool[fi]) + "-" + std::to_string(f + 1),
                                   std::string(kFilePool[fi]) + ".md", ""});
            }
            std::string dir = kDirPool[rng.below(kDirPool.size())];
            p.dirs.push_back(dir);
            for (int f = 0; f < 2; ++f) {
                size_t fi = (f + 4 + rng.range(0, 2)) % kFilePool.size();
                p.files.push_back({dir + "-" + std::string(kFilePool[fi]),
                                   std::string(kFilePool[fi]) + ".cc", dir});
            }
            int n_issues = rng.range(1, 2);
            for (int k = 0; k < n_issues; ++k) {
                p.issues.push_back({k + 1, std::string(kIssuePool[rng.below(kIssuePool.size())])});
            }
            int n_mrs = rng.range(1, 2);
            for (int k = 0; k < n_mrs; ++k) {
                p.merge_requests.push_back(std::string(kMrPool[rng.below(kMrPool.size())]));
            }
            site.projects.push_back(std::move(p));
        }
    }

    return site;
}

Session initial_session(const SiteGraph& site) {
    Session s;
    if (site.level != Level::Sparse) {
        s.logged_in = true;
        if (!site.users.empty()) s.current_user = site.users.front();
    }
    return s;
}

std::optional<Page> build_page(const SiteGraph& site, const std::string& url,
                               const Session& session) {
    if (!site.generated) {
        auto it = site.static_pages.find(url);
        if (it == site.static_pages.end()) return std::nullopt;
        return it->second;
    }

    auto match = site.match_route(url);
    if (!match) return std::nullopt;
    const std::string& route = match->pattern;
    Sketch sk(site, session, url, route, match->requires_login);

    if (route == "/") return build_landing(std::move(sk));
    if (route == "/login") return build_login(std::move(sk));
    if (route == "/register") return build_register(std::move(sk));
    if (route == "/password-reset") return build_password_reset(std::move(sk));
    if (route == "/explore") return build_explore(std::move(sk));
    if (route == "/about") return build_about(std::move(sk));
    if (route == "/search") return build_search(std::move(sk));
    if (route == "/dashboard") return build_dashboard(std::move(sk));
    if (route == "/projects") return build_projects(std::move(sk));
    if (route == "/projects/new") return build_wizard_step1(std::move(sk));
    if (route == "/projects/new/details") return build_wizard_step2(std::move(sk));
    if (route == "/projects/new/confirm") return build_wizard_step3(std::move(sk));
    if (route == "/users") return build_users(std::move(sk));
    if (route == "/users/new") return build_user_new(std::move(sk));
    if (route == "/settings") return build_user_settings(std::move(sk));
    if (route == "/help") return build_help_hub(std::move(sk));
    if (route == kBoundaryUrl) return build_boundary(std::move(sk));
    if (route == kLogoutDisabledUrl) return build_logout_disabled(std::move(sk));

    if (route == "/help/{n}" || route == "/help/{n}/{topic}") {
        int n = 0;
        try {
            n = std::stoi(match->params.at("n"));
        } catch (...) {
            return std::nullopt;
        }
        if (n < 1 || n > site.help_chain_length) return std::nullopt;
        if (route == "/help/{n}") return build_help_chapter(std::move(sk), n);
        const std::string& topic = match->params.at("topic");
        bool known = false;
        for (const auto& t : site.help_topics) known = known || t == topic;
        if (!known) return std::nullopt;
        return build_help_topic(std::move(sk), n, topic);
    }

    if (route == "/u/{user}") {
        const std::string& user = match->params.at("user");
        for (const auto& u : site.visible_users(session)) {
            if (u == user) return build_profile(std::move(sk), user);
        }
        return std::nullopt;
    }

    auto pit = match->params.find("project");
    if (pit == match->params.end()) return std::nullopt;
    auto pv = resolve_project(site, session, pit->second);
    if (!pv) return std::nullopt;

    if (route == "/p/{project}") return build_project_overview(std::move(sk), *pv);
    if (route == "/p/{project}/tree") return build_project_tree(std::move(sk), *pv, "");
    if (route == "/p/{project}/tree/{dir}") {
        if (!pv->seeded) return std::nullopt;
        const std::string& dir = match->params.at("dir");
        for (const auto& d : pv->seeded->dirs) {
            if (d == dir) return build_project_tree(std::move(sk), *pv, dir);
        }
        return std::nullopt;
    }
    if (route == "/p/{project}/blob/{file}" || route == "/p/{project}/edit/{file}") {
        if (!pv->seeded) return std::nullopt;
        const std::string& slug = match->params.at("file");
        for (const auto& f : pv->seeded->files) {
            if (f.slug == slug) {
                return route == "/p/{project}/blob/{file}"
                           ? build_blob(std::move(sk), *pv, f)
                           : build_edit(std::move(sk), *pv, f);
            }
        }
        return std::nullopt;
    }
    if (route == "/p/{project}/commits") {
        if (!pv->seeded) return std::nullopt;
        return build_commits(std::move(sk), *pv);
    }
    if (route == "/p/{project}/issues") return build_issues(std::move(sk), *pv);
    if (route == "/p/{project}/issues/new") return build_issue_new(std::move(sk), *pv);
    if (route == "/p/{project}/issues/{id}") {
        int id = 0;
        try {
            id = std::stoi(match->params.at("id"));
        } catch (...) {
            return std::nullopt;
        }
        if (id < 1 || id > site.issue_count(session, pv->slug)) return std::nullopt;
        return build_issue_detail(std::move(sk), *pv, id);
    }
    if (route == "/p/{project}/mrs") return build_mrs(std::move(sk), *pv);
    if (route == "/p/{project}/mrs/{id}") {
        if (!pv->seeded) return std::nullopt;
        int id = 0;
        try {
            id = std::stoi(match->params.at("id"));
        } catch (...) {
            return std::nullopt;
        }
        if (id < 1 || id > static_cast<int>(pv->seeded->merge_requests.size())) return std::nullopt;
        return build_mr_detail(std::move(sk), *pv, id);
    }
    if (route == "/p/{project}/settings") return build_project_settings(std::move(sk), *pv);
    if (route == "/p/{project}/settings/delete") return build_project_delete(std::move(sk), *pv);

    return std::nullopt;
}

}  // namespace uilab
