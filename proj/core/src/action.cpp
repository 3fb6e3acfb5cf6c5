#include "uilab/action.hpp"

namespace uilab {

std::string mode_name(Mode m) {
    return m == Mode::Structured ? "structured" : "screen";
}

Mode parse_mode(std::string_view s) {
    std::string l = lower(s);
    if (l == "structured") return Mode::Structured;
    if (l == "screen") return Mode::Screen;
    throw ConfigError("unknown mode: " + std::string(s));
}

std::string action_kind_name(ActionKind k) {
    switch (k) {
        case ActionKind::Click: return "click";
        case ActionKind::Fill: return "fill";
        case ActionKind::Hover: return "hover";
        case ActionKind::ClickXY: return "click_xy";
        case ActionKind::FillXY: return "fill_xy";
        case ActionKind::ScrollUp: return "scroll_up";
        case ActionKind::ScrollDown: return "scroll_down";
        case ActionKind::GoBack: return "go_back";
        case ActionKind::GoForward: return "go_forward";
        case ActionKind::Goto: return "goto";
    }
    return "?";
}

ActionKind parse_action_kind(std::string_view s) {
    static const std::pair<const char*, ActionKind> table[] = {
        {"click", ActionKind::Click},         {"fill", ActionKind::Fill},
        {"hover", ActionKind::Hover},         {"click_xy", ActionKind::ClickXY},
        {"fill_xy", ActionKind::FillXY},      {"scroll_up", ActionKind::ScrollUp},
        {"scroll_down", ActionKind::ScrollDown}, {"go_back", ActionKind::GoBack},
        {"go_forward", ActionKind::GoForward},   {"goto", ActionKind::Goto},
    };
    for (const auto& [name, kind] : table) {
        if (s == name) return kind;
    }
    throw ConfigError("unknown action kind: " + std::string(s));
}

bool Action::valid_for(Mode mode) const {
    switch (kind) {
        case ActionKind::Click:
        case ActionKind::Fill:
        case ActionKind::Hover:
            return mode == Mode::Structured;
        case ActionKind::ClickXY:
        case ActionKind::FillXY:
            return mode == Mode::Screen;
        default:
            return true;
    }
}

nlohmann::ordered_json action_to_json(const Action& a) {
    nlohmann::ordered_json j;
    j["kind"] = action_kind_name(a.kind);
    switch (a.kind) {
        case ActionKind::Click:
        case ActionKind::Hover:
            j["element"] = a.element_id;
            break;
        case ActionKind::Fill:
            j["element"] = a.element_id;
            j["text"] = a.text;
            break;
        case ActionKind::ClickXY:
            j["x"] = a.x;
            j["y"] = a.y;
            break;
        case ActionKind::FillXY:
            j["x"] = a.x;
            j["y"] = a.y;
            j["text"] = a.text;
            break;
        case ActionKind::Goto:
            j["url"] = a.url;
            break;
        default:
            break;
    }
    return j;
}

Action action_from_json(const nlohmann::json& j) {
    Action a;
    a.kind = parse_action_kind(j.at("kind").get<std::string>());
    a.element_id = j.value("element", "");
    a.x = j.value("x", 0);
    a.y = j.value("y", 0);
    a.text = j.value("text", "");
    a.url = j.value("url", "");
    return a;
}

}  // namespace uilab
