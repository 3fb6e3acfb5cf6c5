#pragma once

#include <string>

#include <json.hpp>

#include "uilab/common.hpp"

namespace uilab {

enum class Mode { Structured, Screen };

std::string mode_name(Mode m);
Mode parse_mode(std::string_view s);

// One atomic environment action. Every call to Env::step consumes exactly
// one of these and exactly one unit of budget, whether or not it has any
// effect.
enum class ActionKind {
    Click,      // Structured: click element by id
    Fill,       // Structured: type text into element by id
    Hover,      // Structured: hover element by id (opens declared menus)
    ClickXY,    // Screen: click viewport pixel
    FillXY,     // Screen: click viewport pixel then type
    ScrollUp,
    ScrollDown,
    GoBack,
    GoForward,
    Goto,
};

std::string action_kind_name(ActionKind k);
ActionKind parse_action_kind(std::string_view s);

struct Action {
    ActionKind kind = ActionKind::ScrollDown;
    std::string element_id;  // Click/Fill/Hover
    int x = 0, y = 0;        // ClickXY/FillXY, viewport coordinates
    std::string text;        // Fill/FillXY
    std::string url;         // Goto

    static Action click(std::string id) { return {ActionKind::Click, std::move(id), 0, 0, "", ""}; }
    static Action fill(std::string id, std::string text) {
        return {ActionKind::Fill, std::move(id), 0, 0, std::move(text), ""};
    }
    static Action hover(std::string id) { return {ActionKind::Hover, std::move(id), 0, 0, "", ""}; }
    static Action click_xy(int x, int y) { return {ActionKind::ClickXY, "", x, y, "", ""}; }
    static Action fill_xy(int x, int y, std::string text) {
        return {ActionKind::FillXY, "", x, y, std::move(text), ""};
    }
    static Action scroll_up() { return {ActionKind::ScrollUp, "", 0, 0, "", ""}; }
    static Action scroll_down() { return {ActionKind::ScrollDown, "", 0, 0, "", ""}; }
    static Action go_back() { return {ActionKind::GoBack, "", 0, 0, "", ""}; }
    static Action go_forward() { return {ActionKind::GoForward, "", 0, 0, "", ""}; }
    static Action goto_url(std::string url) { return {ActionKind::Goto, "", 0, 0, "", std::move(url)}; }

    // Whether this action kind is part of the given mode's action space.
    bool valid_for(Mode mode) const;

    bool operator==(const Action&) const = default;
};

nlohmann::ordered_json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j);

}  // namespace uilab
