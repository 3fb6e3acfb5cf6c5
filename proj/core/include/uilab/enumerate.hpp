#pragma once

#include "uilab/functionality.hpp"
#include "uilab/metrics.hpp"

namespace uilab {

// Every URL that resolves to a page under the given session, seeded and
// created entities included.
std::vector<std::string> materializable_urls(const SiteGraph& site, const Session& session);

// Ground-truth functionality census. Walks every page materialization an
// agent can reach from reset — including entity-creation branches up to the
// site's caps and hover-opened menus — and unions the keys. Reachability
// means a transition path exists from the landing page; URLs with no inbound
// link or effect do not count.
std::set<FunctionalityKey> reachable_keys(const SiteGraph& site, Mode mode,
                                          const std::vector<OverrideRule>& rules);

// The subset reachable without ever logging in (the Sparse bootstrap world).
std::set<FunctionalityKey> reachable_keys_logged_out(const SiteGraph& site, Mode mode,
                                                     const std::vector<OverrideRule>& rules);

// Keys on pages materializable under the session as it stands, with no
// further entity creation. Useful for before/after comparisons around flows.
std::set<FunctionalityKey> materializable_keys(const SiteGraph& site, const Session& session,
                                               Mode mode,
                                               const std::vector<OverrideRule>& rules);

// |reachable_keys| with the site's own override rules.
int enumerate_total_functionalities(const SiteGraph& site, Mode mode);

}  // namespace uilab
