#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uilab/element.hpp"

namespace uilab {

struct Page {
    std::string url;
    std::string route;  // the template this URL instantiates
    std::vector<Element> elements;
    int content_height = kViewportHeight;
    bool requires_login = false;
    std::string theme_class;

    const Element* find(std::string_view id) const {
        for (const auto& e : elements) {
            if (e.id == id) return &e;
        }
        return nullptr;
    }

    int max_scroll() const {
        return std::max(0, content_height - kViewportHeight);
    }
};

// Topmost enabled interactive element under the viewport point (x, y), or
// nullptr. The point is translated by scroll_y into page coordinates; ties
// on z_order go to the later element in document order.
const Element* hit_test(const Page& page, int scroll_y, int x, int y);

// Enabled elements whose boxes intersect the viewport at the given scroll.
std::vector<const Element*> viewport_filter(const Page& page, int scroll_y);

}  // namespace uilab
