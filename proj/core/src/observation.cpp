#include "uilab/observation.hpp"

namespace uilab {

namespace {

const char* kStructuredInstructions =
    "You control a web application through its element tree. Available actions: "
    "click(id), fill(id, text), hover(id), scroll_up, scroll_down, go_back, "
    "go_forward, goto(url). One action per step.";

const char* kScreenInstructions =
    "You see a 1280x720 viewport of a web application. Available actions: "
    "click_xy(x, y), fill_xy(x, y, text), scroll_up, scroll_down, go_back, "
    "go_forward, goto(url). Coordinates are viewport pixels. One action per step.";

StructuredObservation structured_from_page(const Page& page) {
    StructuredObservation obs;
    obs.url = page.url;
    obs.route = page.route;
    obs.theme_class = page.theme_class;
    obs.instructions = kStructuredInstructions;
    obs.elements.reserve(page.elements.size());
    for (const auto& e : page.elements) {
        obs.elements.push_back(
            {e.id, e.kind, e.classes, e.label, e.enabled, e.route_template, e.href});
    }
    return obs;
}

ScreenObservation screen_from_page(const Page& page, int scroll_y, bool with_oracle) {
    ScreenObservation obs;
    obs.url = page.url;
    obs.scroll_y = scroll_y;
    obs.max_scroll = page.max_scroll();
    obs.instructions = kScreenInstructions;

    for (const Element* e : viewport_filter(page, scroll_y)) {
        obs.geometry.push_back(
            {{e->box.x, e->box.y - scroll_y, e->box.w, e->box.h}, e->z_order});
    }

    if (with_oracle) {
        const Rect viewport{0, scroll_y, kViewportWidth, kViewportHeight};
        std::vector<OracleItem> items;
        for (const Element* e : viewport_filter(page, scroll_y)) {
            if (!e->interactive()) continue;
            Rect vis = e->box.intersection(viewport);
            if (vis.empty()) continue;
            int cx = vis.x + vis.w / 2;
            int cy = vis.y - scroll_y + vis.h / 2;
            // Only boxes whose center genuinely resolves to the element are
            // handed out; occluded elements stay invisible to the oracle.
            if (hit_test(page, scroll_y, cx, cy) != e) continue;
            items.push_back({e->id, e->kind, {vis.x, vis.y - scroll_y, vis.w, vis.h}});
        }
        obs.oracle = std::move(items);
    }
    return obs;
}

}  // namespace

StructuredObservation observe_structured(const EnvState& state) {
    return structured_from_page(current_page(state));
}

ScreenObservation observe_screen(const EnvState& state, bool with_oracle) {
    return screen_from_page(current_page(state), state.scroll_y, with_oracle);
}

Observation observe(const EnvState& state, bool with_oracle) {
    Observation obs;
    obs.page = current_page(state);
    obs.scroll_y = state.scroll_y;
    obs.structured = structured_from_page(obs.page);
    obs.screen = screen_from_page(obs.page, state.scroll_y, with_oracle);
    return obs;
}

nlohmann::ordered_json structured_to_json(const StructuredObservation& o) {
    nlohmann::ordered_json j;
    j["url"] = o.url;
    j["route"] = o.route;
    j["theme_class"] = o.theme_class;
    auto elems = nlohmann::ordered_json::array();
    for (const auto& e : o.elements) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["kind"] = element_kind_name(e.kind);
        je["classes"] = e.classes;
        je["label"] = e.label;
        je["enabled"] = e.enabled;
        if (!e.route_template.empty()) je["route_template"] = e.route_template;
        if (!e.href.empty()) je["href"] = e.href;
        elems.push_back(std::move(je));
    }
    j["elements"] = std::move(elems);
    j["instructions"] = o.instructions;
    return j;
}

nlohmann::ordered_json screen_to_json(const ScreenObservation& o) {
    nlohmann::ordered_json j;
    j["url"] = o.url;
    j["viewport"] = {o.viewport.x, o.viewport.y, o.viewport.w, o.viewport.h};
    j["scroll_y"] = o.scroll_y;
    j["max_scroll"] = o.max_scroll;
    auto boxes = nlohmann::ordered_json::array();
    for (const auto& g : o.geometry) {
        boxes.push_back({g.box.x, g.box.y, g.box.w, g.box.h, g.z_order});
    }
    j["geometry"] = std::move(boxes);
    if (o.oracle) {
        auto items = nlohmann::ordered_json::array();
        for (const auto& it : o.oracle.value()) {
            nlohmann::ordered_json ji;
            ji["id"] = it.id;
            ji["kind"] = element_kind_name(it.kind);
            ji["box"] = {it.visible_box.x, it.visible_box.y, it.visible_box.w, it.visible_box.h};
            items.push_back(std::move(ji));
        }
        j["oracle"] = std::move(items);
    }
    j["instructions"] = o.instructions;
    return j;
}

}  // namespace uilab
