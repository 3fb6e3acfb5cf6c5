#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace uilab {

// Committed create-project wizard data. Each "continue" click moves text out
// of the volatile pending map into here; navigation cannot lose it.
struct WizardState {
    int stage = 0;  // 0 = nothing committed, 1 = step one done, 2 = ready to create
    std::string name;
    std::string visibility;
    std::string description;
    std::string topics;
    bool readme = false;

    bool operator==(const WizardState&) const = default;
};

struct CreatedProject {
    std::string slug;
    std::string name;

    bool operator==(const CreatedProject&) const = default;
};

// Everything mutable about a browsing session. Pending form text belongs to
// the current page only and is discarded on navigation.
struct Session {
    bool logged_in = false;
    std::string current_user;
    std::vector<std::string> created_users;
    std::vector<CreatedProject> created_projects;
    std::map<std::string, int> extra_issues;  // project slug -> issues created this session
    std::set<std::string> deleted_projects;
    WizardState wizard;
    int theme_index = 0;
    std::string open_menu;
    std::map<std::string, std::string> pending;

    bool operator==(const Session&) const = default;
};

}  // namespace uilab
