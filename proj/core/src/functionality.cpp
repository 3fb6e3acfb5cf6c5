#include "uilab/functionality.hpp"

#include <algorithm>

namespace uilab {

namespace {

bool pattern_matches(const std::string& pattern, const std::string& cls) {
    if (!pattern.empty() && pattern.back() == '*') {
        return starts_with(cls, std::string_view(pattern).substr(0, pattern.size() - 1));
    }
    return pattern == cls;
}

std::string transition_signature(const Element& e, const std::string& page_route) {
    if (e.kind == ElementKind::Link) {
        const std::string& target = e.route_template.empty() ? e.href : e.route_template;
        return "nav:" + target;
    }
    return "act:" + element_kind_name(e.kind) + ":" + page_route + ":" + strip_index(e.id);
}

FunctionalityKey key_unchecked(const Element& e, const std::string& page_route,
                               const std::vector<OverrideRule>& rules) {
    return {transition_signature(e, page_route), visual_signature(e.classes, rules)};
}

}  // namespace

std::vector<std::string> apply_overrides(const std::vector<std::string>& classes,
                                         const std::vector<OverrideRule>& rules) {
    std::vector<const OverrideRule*> ordered;
    ordered.reserve(rules.size());
    for (const auto& r : rules) ordered.push_back(&r);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        return a->pattern.size() > b->pattern.size();
    });

    std::vector<std::string> out;
    for (const auto& cls : classes) {
        std::string mapped = cls;
        for (const auto* r : ordered) {
            if (pattern_matches(r->pattern, cls)) {
                mapped = r->label;
                break;
            }
        }
        out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string visual_signature(const std::vector<std::string>& classes,
                             const std::vector<OverrideRule>& rules) {
    return to_hex(fnv1a64(join(apply_overrides(classes, rules), ",")));
}

FunctionalityKey functionality_key(const Element& element, const Page& page,
                                   const std::vector<OverrideRule>& rules) {
    if (!element.interactive()) {
        throw NonInteractiveError("element provides no functionality: " + element.id);
    }
    return key_unchecked(element, page.route, rules);
}

std::set<FunctionalityKey> functionalities_of(const Observation& obs, Mode mode,
                                              const std::vector<OverrideRule>& rules) {
    std::set<FunctionalityKey> out;
    if (mode == Mode::Structured) {
        for (const auto& e : obs.page.elements) {
            if (!e.interactive()) continue;
            out.insert(key_unchecked(e, obs.page.route, rules));
        }
    } else {
        for (const Element* e : viewport_filter(obs.page, obs.scroll_y)) {
            if (!e->interactive()) continue;
            out.insert(key_unchecked(*e, obs.page.route, rules));
        }
    }
    return out;
}

std::set<FunctionalityKey> page_keys(const Page& page, Mode mode,
                                     const std::vector<OverrideRule>& rules) {
    std::set<FunctionalityKey> out;
    const Rect content{0, 0, kViewportWidth, std::max(page.content_height, kViewportHeight)};
    for (const auto& e : page.elements) {
        if (!e.interactive()) continue;
        // In Screen mode an element counts only if some scroll position shows
        // it, which for clamped vertical scrolling means a nonempty box
        // inside the content band.
        if (mode == Mode::Screen && e.box.intersection(content).empty()) continue;
        out.insert(key_unchecked(e, page.route, rules));
    }
    return out;
}

}  // namespace uilab
