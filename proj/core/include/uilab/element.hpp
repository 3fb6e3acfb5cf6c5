#pragma once

#include <string>
#include <vector>

#include "uilab/common.hpp"

namespace uilab {

enum class ElementKind {
    Link,
    Button,
    Input,
    Select,
    Textarea,
    Checkbox,
    Container,
    Text,
};

std::string element_kind_name(ElementKind k);
ElementKind parse_element_kind(std::string_view s);

// Only these kinds can provide a state transition; containers and text are
// inert regardless of their other attributes.
bool is_interactive_kind(ElementKind k);

// What clicking (or submitting) an element does. Link navigation carries its
// target in Element::href; every other effect is interpreted by the
// environment against the current session.
enum class EffectKind {
    None,           // inert click (focus, decorative)
    Navigate,       // go to Element::href
    External,       // leaves the site: redirected to the boundary page
    Upload,         // file-upload dialog: redirected to the boundary page
    NavigateBack,   // behaves like go_back (boundary page button)
    Logout,         // logout-disabled page in Abundant/Moderate, real in Sparse
    ToggleMenu,     // open/close the dropdown named by Element::effect_target
    ThemeCycle,     // advance the session theme
    SearchSubmit,   // navigate to the search results page
    SubmitLogin,
    SubmitRegister,
    WizardContinue, // commit the current wizard step, advance to effect_target
    WizardCreate,   // finish the wizard: create the project
    CreateIssue,
    CreateUser,
    DeleteProject,  // requires the project name typed into the confirm input
    Transient,      // acknowledged but leaves no durable state (save, comment, vote)
};

std::string effect_kind_name(EffectKind k);
EffectKind parse_effect_kind(std::string_view s);

struct Element {
    std::string id;                  // unique within its page
    ElementKind kind = ElementKind::Text;
    std::vector<std::string> classes;
    std::string label;
    std::string route_template;      // for links: the pattern the target instantiates
    std::string href;                // for links: concrete target URL
    bool enabled = true;
    Rect box;
    int z_order = 0;

    EffectKind effect = EffectKind::None;
    std::string effect_target;

    bool interactive() const { return enabled && is_interactive_kind(kind); }
    bool fillable() const {
        return kind == ElementKind::Input || kind == ElementKind::Textarea;
    }
};

}  // namespace uilab
