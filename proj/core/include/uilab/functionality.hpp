#pragma once

#include <set>
#include <string>
#include <vector>

#include "uilab/observation.hpp"

namespace uilab {

struct NonInteractiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One countable functionality: the pair of a transitional signature (where
// acting on the element can take the session) and a visual signature (the
// canonical style-class group). Links collapse by target URL pattern, every
// other interactive kind by (kind, page route, de-indexed element id).
struct FunctionalityKey {
    std::string transition_sig;
    std::string visual_sig;

    std::string canonical() const { return transition_sig + "|" + visual_sig; }
    uint64_t hash() const { return fnv1a64(canonical()); }
    auto operator<=>(const FunctionalityKey&) const = default;
};

// Collapse a class list to its canonical form: each class rewritten by the
// first matching override rule (longest pattern first), then sorted and
// deduplicated. Patterns are literal strings, optionally ending in '*'.
std::vector<std::string> apply_overrides(const std::vector<std::string>& classes,
                                         const std::vector<OverrideRule>& rules);

std::string visual_signature(const std::vector<std::string>& classes,
                             const std::vector<OverrideRule>& rules);

FunctionalityKey functionality_key(const Element& element, const Page& page,
                                   const std::vector<OverrideRule>& rules);

// All keys derivable from the page in the given mode. Structured counts the
// whole element tree; Screen counts only elements visible at this scroll
// position.
std::set<FunctionalityKey> functionalities_of(const Observation& obs, Mode mode,
                                              const std::vector<OverrideRule>& rules);

// Screen-mode keys across every legal scroll position, i.e. what an agent
// could reveal from this page state by scrolling alone.
std::set<FunctionalityKey> page_keys(const Page& page, Mode mode,
                                     const std::vector<OverrideRule>& rules);

}  // namespace uilab
