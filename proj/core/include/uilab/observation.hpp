#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uilab/env.hpp"

namespace uilab {

struct StructuredElementRecord {
    std::string id;
    ElementKind kind = ElementKind::Text;
    std::vector<std::string> classes;
    std::string label;
    bool enabled = true;
    std::string route_template;
    std::string href;
};

// Complete element tree of the current page; viewport and scroll play no
// part here.
struct StructuredObservation {
    std::string url;
    std::string route;
    std::string theme_class;
    std::vector<StructuredElementRecord> elements;
    std::string instructions;
};

// A box an agent can aim at, in viewport coordinates. Identity, kind and
// label are deliberately absent: screen-mode agents click coordinates.
struct GeomBox {
    Rect box;
    int z_order = 0;
};

// Ground-truth identity and clickable rectangle for one visible interactive
// element. Granted only to baselines flagged as oracle-equipped.
struct OracleItem {
    std::string id;
    ElementKind kind = ElementKind::Text;
    Rect visible_box;  // viewport coordinates; clicking its center hits the element
};

struct ScreenObservation {
    std::string url;
    Rect viewport{0, 0, kViewportWidth, kViewportHeight};
    int scroll_y = 0;
    int max_scroll = 0;
    std::vector<GeomBox> geometry;
    std::optional<std::vector<OracleItem>> oracle;
    std::string instructions;
};

// Everything observable at one instant. Agents receive the member matching
// their mode; metric computation reads the underlying page so the screen
// restriction cannot leak agent-facing data.
struct Observation {
    Page page;
    int scroll_y = 0;
    StructuredObservation structured;
    ScreenObservation screen;
};

StructuredObservation observe_structured(const EnvState& state);
ScreenObservation observe_screen(const EnvState& state, bool with_oracle = false);
Observation observe(const EnvState& state, bool with_oracle = false);

nlohmann::ordered_json structured_to_json(const StructuredObservation& o);
nlohmann::ordered_json screen_to_json(const ScreenObservation& o);

}  // namespace uilab
