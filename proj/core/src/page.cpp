#include "uilab/page.hpp"

namespace uilab {

const Element* hit_test(const Page& page, int scroll_y, int x, int y) {
    if (x < 0 || x >= kViewportWidth || y < 0 || y >= kViewportHeight) return nullptr;
    const Rect viewport{0, scroll_y, kViewportWidth, kViewportHeight};
    const int page_y = y + scroll_y;
    const Element* best = nullptr;
    for (const auto& e : page.elements) {
        if (!e.interactive()) continue;
        if (!e.box.contains(x, page_y)) continue;
        if (!e.box.intersects(viewport)) continue;
        if (!best || e.z_order >= best->z_order) best = &e;
    }
    return best;
}

std::vector<const Element*> viewport_filter(const Page& page, int scroll_y) {
    const Rect viewport{0, scroll_y, kViewportWidth, kViewportHeight};
    std::vector<const Element*> out;
    for (const auto& e : page.elements) {
        if (!e.enabled) continue;
        if (e.box.intersects(viewport)) out.push_back(&e);
    }
    return out;
}

}  // namespace uilab
