#include "uilab/element.hpp"

#include <array>

namespace uilab {

namespace {

constexpr std::array<const char*, 8> kKindNames = {
    "link", "button", "input", "select", "textarea", "checkbox", "container", "text"};

constexpr std::array<const char*, 17> kEffectNames = {
    "none",          "navigate",      "external",       "upload",
    "navigate_back", "logout",        "toggle_menu",    "theme_cycle",
    "search_submit", "submit_login",  "submit_register", "wizard_continue",
    "wizard_create", "create_issue",  "create_user",    "delete_project",
    "transient"};

}  // namespace

std::string element_kind_name(ElementKind k) {
    return kKindNames[static_cast<size_t>(k)];
}

ElementKind parse_element_kind(std::string_view s) {
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (s == kKindNames[i]) return static_cast<ElementKind>(i);
    }
    throw ConfigError("unknown element kind: " + std::string(s));
}

bool is_interactive_kind(ElementKind k) {
    switch (k) {
        case ElementKind::Link:
        case ElementKind::Button:
        case ElementKind::Input:
        case ElementKind::Select:
        case ElementKind::Textarea:
        case ElementKind::Checkbox:
            return true;
        case ElementKind::Container:
        case ElementKind::Text:
            return false;
    }
    return false;
}

std::string effect_kind_name(EffectKind k) {
    return kEffectNames[static_cast<size_t>(k)];
}

EffectKind parse_effect_kind(std::string_view s) {
    for (size_t i = 0; i < kEffectNames.size(); ++i) {
        if (s == kEffectNames[i]) return static_cast<EffectKind>(i);
    }
    throw ConfigError("unknown effect kind: " + std::string(s));
}

}  // namespace uilab
