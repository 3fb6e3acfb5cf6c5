#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uilab/page.hpp"
#include "uilab/session.hpp"

namespace uilab {

enum class Level { Abundant, Moderate, Sparse };

std::string level_name(Level l);
Level parse_level(std::string_view s);

inline constexpr const char* kBoundaryUrl = "/boundary";
inline constexpr const char* kLogoutDisabledUrl = "/logout-disabled";
inline constexpr const char* kLandingUrl = "/";
inline constexpr const char* kLoginUrl = "/login";

struct RouteSpec {
    std::string pattern;  // "/p/{project}/issues/{id}"
    bool requires_login = false;
};

struct RouteMatch {
    std::string pattern;
    std::map<std::string, std::string> params;
    bool requires_login = false;
};

// Visual-signature grouping rule: classes matching `pattern` (a literal
// prefix ending in '*', or an exact string) collapse to `label`. Applied
// longest-pattern-first.
struct OverrideRule {
    std::string pattern;
    std::string label;
};

struct SeededFile {
    std::string slug;
    std::string title;
    std::string dir;  // empty = repository root
};

struct SeededIssue {
    int id = 0;
    std::string title;
};

struct SeededProject {
    std::string slug;
    std::string name;  // display name, "org / title"
    bool is_public = false;
    std::vector<SeededFile> files;
    std::vector<SeededIssue> issues;
    std::vector<std::string> merge_requests;  // titles; ids are 1-based positions
    std::vector<std::string> dirs;
};

// The complete synthetic application. Immutable after generation (or import)
// and freely shareable between environments; all mutation lives in Session.
struct SiteGraph {
    int schema_version = kSiteSchemaVersion;
    bool generated = true;
    Level level = Level::Abundant;
    uint64_t seed = 0;

    std::vector<RouteSpec> routes;
    std::vector<OverrideRule> overrides;
    std::vector<std::string> themes;

    // Seeded world; already filtered by level (Moderate drops projects,
    // Sparse drops projects and users).
    std::vector<SeededProject> projects;
    std::vector<std::string> users;

    int help_chain_length = 0;
    std::vector<std::string> help_topics;

    int max_created_projects = 2;
    int max_created_issues_per_project = 1;
    int max_created_users = 2;

    // Imported (generated = false) sites carry explicit pages instead of
    // builders. Keyed by URL.
    std::map<std::string, Page> static_pages;

    std::optional<RouteMatch> match_route(const std::string& url) const;
    const SeededProject* seeded_project(const std::string& slug) const;
    bool project_deleted(const Session& s, const std::string& slug) const {
        return s.deleted_projects.count(slug) > 0;
    }

    // Every project visible to the session, seeded then created, minus
    // deletions. Pairs of (slug, display name).
    std::vector<std::pair<std::string, std::string>> visible_projects(const Session& s) const;
    std::vector<std::string> visible_users(const Session& s) const;
    int issue_count(const Session& s, const std::string& slug) const;
};

SiteGraph generate_site(Level level, uint64_t seed);

// Materialize the page for a URL under the given session, or nullopt when
// the URL resolves to no page (unknown route, missing entity). Gating is not
// applied here; navigation handles redirects.
std::optional<Page> build_page(const SiteGraph& site, const std::string& url,
                               const Session& session);

Session initial_session(const SiteGraph& site);

std::string export_site(const SiteGraph& site);
SiteGraph import_site(const std::string& text);

}  // namespace uilab
