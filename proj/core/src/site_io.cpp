#include <json.hpp>

#include "uilab/enumerate.hpp"
#include "uilab/site.hpp"

namespace uilab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json element_to_json(const Element& e) {
    ordered_json j;
    j["id"] = e.id;
    j["kind"] = element_kind_name(e.kind);
    j["classes"] = e.classes;
    j["label"] = e.label;
    if (!e.route_template.empty()) j["route_template"] = e.route_template;
    if (!e.href.empty()) j["href"] = e.href;
    j["enabled"] = e.enabled;
    j["box"] = {e.box.x, e.box.y, e.box.w, e.box.h};
    j["z_order"] = e.z_order;
    return j;
}

Element element_from_json(const json& j) {
    Element e;
    e.id = j.at("id").get<std::string>();
    e.kind = parse_element_kind(j.at("kind").get<std::string>());
    e.classes = j.value("classes", std::vector<std::string>{});
    e.label = j.value("label", "");
    e.route_template = j.value("route_template", "");
    e.href = j.value("href", "");
    e.enabled = j.value("enabled", true);
    auto box = j.at("box");
    e.box = {box.at(0).get<int>(), box.at(1).get<int>(), box.at(2).get<int>(),
             box.at(3).get<int>()};
    e.z_order = j.value("z_order", 0);
    if (e.kind == ElementKind::Link && !e.href.empty()) e.effect = EffectKind::Navigate;
    return e;
}

ordered_json page_to_json(const Page& p) {
    ordered_json j;
    j["url"] = p.url;
    j["route"] = p.route;
    j["content_height"] = p.content_height;
    j["requires_login"] = p.requires_login;
    j["theme_class"] = p.theme_class;
    auto elems = ordered_json::array();
    for (const auto& e : p.elements) elems.push_back(element_to_json(e));
    j["elements"] = std::move(elems);
    return j;
}

Page page_from_json(const json& j) {
    Page p;
    p.url = j.at("url").get<std::string>();
    p.route = j.value("route", p.url);
    p.content_height = j.value("content_height", kViewportHeight);
    p.requires_login = j.value("requires_login", false);
    p.theme_class = j.value("theme_class", "theme-default");
    for (const auto& je : j.value("elements", json::array())) {
        p.elements.push_back(element_from_json(je));
    }
    return p;
}

void validate_page(const Page& p) {
    std::set<std::string> ids;
    for (const auto& e : p.elements) {
        if (!ids.insert(e.id).second) {
            throw ConfigError("duplicate element id '" + e.id + "' on " + p.url);
        }
        if (e.box.w < 0 || e.box.h < 0) {
            throw ConfigError("negative box extent on element '" + e.id + "'");
        }
        if (e.box.x < 0 || e.box.x + e.box.w > kViewportWidth || e.box.y < 0 ||
            e.box.y + e.box.h > std::max(p.content_height, kViewportHeight)) {
            throw ConfigError("element '" + e.id + "' escapes the page bounds on " + p.url);
        }
        if (e.kind == ElementKind::Link && e.route_template.empty() && e.href.empty()) {
            throw ConfigError("link '" + e.id + "' has neither template nor href");
        }
    }
}

}  // namespace

std::string export_site(const SiteGraph& site) {
    ordered_json doc;
    doc["schema_version"] = site.schema_version;
    doc["generated"] = site.generated;
    doc["level"] = level_name(site.level);
    doc["seed"] = site.seed;

    auto routes = ordered_json::array();
    for (const auto& r : site.routes) {
        routes.push_back({{"pattern", r.pattern}, {"requires_login", r.requires_login}});
    }
    doc["routes"] = std::move(routes);

    auto overrides = ordered_json::array();
    for (const auto& r : site.overrides) {
        overrides.push_back({{"pattern", r.pattern}, {"label", r.label}});
    }
    doc["overrides"] = std::move(overrides);
    doc["themes"] = site.themes;

    ordered_json entities;
    entities["users"] = site.users;
    auto projects = ordered_json::array();
    for (const auto& p : site.projects) {
        ordered_json jp;
        jp["slug"] = p.slug;
        jp["name"] = p.name;
        jp["public"] = p.is_public;
        auto files = ordered_json::array();
        for (const auto& f : p.files) {
            files.push_back({{"slug", f.slug}, {"title", f.title}, {"dir", f.dir}});
        }
        jp["files"] = std::move(files);
        jp["dirs"] = p.dirs;
        auto issues = ordered_json::array();
        for (const auto& i : p.issues) issues.push_back({{"id", i.id}, {"title", i.title}});
        jp["issues"] = std::move(issues);
        jp["merge_requests"] = p.merge_requests;
        projects.push_back(std::move(jp));
    }
    entities["projects"] = std::move(projects);
    entities["help_chain_length"] = site.help_chain_length;
    entities["help_topics"] = site.help_topics;
    entities["caps"] = {{"projects", site.max_created_projects},
                        {"issues_per_project", site.max_created_issues_per_project},
                        {"users", site.max_created_users}};
    doc["entities"] = std::move(entities);

    // Materialized snapshot of the initial world: pages plus the behavior
    // table for every interactive element.
    Session initial = initial_session(site);
    auto pages = ordered_json::array();
    auto transitions = ordered_json::array();
    std::vector<std::string> urls;
    if (site.generated) {
        urls = materializable_urls(site, initial);
    } else {
        for (const auto& [url, page] : site.static_pages) urls.push_back(url);
    }
    for (const auto& url : urls) {
        auto page = build_page(site, url, initial);
        if (!page) continue;
        pages.push_back(page_to_json(*page));
        for (const auto& e : page->elements) {
            if (!e.interactive() || e.effect == EffectKind::None) continue;
            ordered_json t;
            t["url"] = url;
            t["element"] = e.id;
            t["action"] = "click";
            t["effect"] = effect_kind_name(e.effect);
            if (!e.effect_target.empty()) {
                t["target"] = e.effect_target;
            } else if (e.effect == EffectKind::Navigate) {
                t["target"] = e.href;
            }
            transitions.push_back(std::move(t));
        }
    }
    doc["pages"] = std::move(pages);
    doc["transitions"] = std::move(transitions);
    return doc.dump(2) + "\n";
}

SiteGraph import_site(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("site document is not valid JSON: ") + e.what());
    }
    int version = doc.value("schema_version", -1);
    if (version != kSiteSchemaVersion) {
        throw ConfigError("unsupported site schema version " + std::to_string(version) +
                          " (expected " + std::to_string(kSiteSchemaVersion) + ")");
    }
    Level level = parse_level(doc.value("level", "abundant"));
    uint64_t seed = doc.value("seed", 0ULL);

    if (doc.value("generated", false)) {
        // Generated sites reconstruct bit-identically from (level, seed).
        return generate_site(level, seed);
    }

    SiteGraph site;
    site.generated = false;
    site.level = level;
    site.seed = seed;
    site.themes = doc.value("themes", std::vector<std::string>{"theme-default"});
    for (const auto& r : doc.value("overrides", json::array())) {
        site.overrides.push_back(
            {r.at("pattern").get<std::string>(), r.at("label").get<std::string>()});
    }
    for (const auto& r : doc.value("routes", json::array())) {
        site.routes.push_back(
            {r.at("pattern").get<std::string>(), r.value("requires_login", false)});
    }
    for (const auto& jp : doc.value("pages", json::array())) {
        Page p = page_from_json(jp);
        validate_page(p);
        site.static_pages[p.url] = std::move(p);
    }
    if (site.static_pages.find(kLandingUrl) == site.static_pages.end()) {
        throw ConfigError("site document defines no landing page \"/\"");
    }
    for (const auto& jt : doc.value("transitions", json::array())) {
        const std::string url = jt.at("url").get<std::string>();
        auto it = site.static_pages.find(url);
        if (it == site.static_pages.end()) {
            throw ConfigError("transition references unknown page " + url);
        }
        Element* elem = nullptr;
        for (auto& e : it->second.elements) {
            if (e.id == jt.at("element").get<std::string>()) elem = &e;
        }
        if (!elem) {
            throw ConfigError("transition references unknown element on " + url);
        }
        elem->effect = parse_effect_kind(jt.at("effect").get<std::string>());
        std::string target = jt.value("target", "");
        if (elem->effect == EffectKind::Navigate) {
            elem->href = target;
        } else {
            elem->effect_target = target;
        }
    }
    if (site.static_pages.find(kBoundaryUrl) == site.static_pages.end()) {
        Page boundary;
        boundary.url = kBoundaryUrl;
        boundary.route = kBoundaryUrl;
        Element home;
        home.id = "boundary-home";
        home.kind = ElementKind::Button;
        home.label = "Home";
        home.classes = {"btn", "btn-home"};
        home.box = {240, 200, 120, 44};
        home.effect = EffectKind::Navigate;
        home.href = "/";
        boundary.elements.push_back(std::move(home));
        site.static_pages[kBoundaryUrl] = std::move(boundary);
    }
    return site;
}

}  // namespace uilab
