#include "uilab/agents.hpp"

namespace uilab {

namespace {

Action click_center(const Rect& box) {
    return Action::click_xy(box.x + box.w / 2, box.y + box.h / 2);
}

bool in_site(const std::string& href) {
    return !href.empty() && href[0] == '/';
}

}  // namespace

Action RandomAgent::act(const AgentView& view) {
    if (view.mode == Mode::Structured) {
        const auto& elems = view.structured->elements;
        std::vector<Action> actions = {Action::scroll_up(), Action::scroll_down(),
                                       Action::go_back()};
        for (const auto& e : elems) actions.push_back(Action::click(e.id));
        if (include_fill_) {
            for (const auto& e : elems) {
                if (e.kind == ElementKind::Input || e.kind == ElementKind::Textarea) {
                    actions.push_back(Action::fill(e.id, "probe"));
                }
            }
        }
        return actions[rng_.below(actions.size())];
    }

    double u = rng_.real();
    if (u < kScrollUpWeight) return Action::scroll_up();
    if (u < kScrollUpWeight + kScrollDownWeight) return Action::scroll_down();
    if (u < kScrollUpWeight + kScrollDownWeight + kGoBackWeight) return Action::go_back();
    int x = static_cast<int>(rng_.below(kViewportWidth));
    int y = static_cast<int>(rng_.below(kViewportHeight));
    return Action::click_xy(x, y);
}

Action HeuristicRandomAgent::act(const AgentView& view) {
    std::vector<Action> actions = {Action::scroll_up(), Action::scroll_down(),
                                   Action::go_back()};
    if (view.mode == Mode::Structured) {
        for (const auto& e : view.structured->elements) {
            if (e.enabled && is_interactive_kind(e.kind)) actions.push_back(Action::click(e.id));
        }
    } else {
        if (!view.screen->oracle) {
            throw OracleMissingError("heuristic-random needs the oracle overlay in screen mode");
        }
        for (const auto& item : view.screen->oracle.value()) {
            actions.push_back(click_center(item.visible_box));
        }
    }
    return actions[rng_.below(actions.size())];
}

Action UrlSearchAgent::act(const AgentView& view) {
    if (view.mode != Mode::Structured) {
        throw ConfigError("URL-space search operates in structured mode only");
    }
    const auto& obs = *view.structured;
    if (visited_.empty()) visited_.insert(obs.url);

    // Finish surfacing the current page before moving on.
    if (!scrolled_to_bottom_) {
        if (known_scroll_ && known_max_ && *known_scroll_ >= *known_max_) {
            scrolled_to_bottom_ = true;
        } else {
            return Action::scroll_down();
        }
    }

    for (const auto& e : obs.elements) {
        if (e.kind != ElementKind::Link || !e.enabled || e.href.empty()) continue;
        if (!in_site(e.href) && !starts_with(e.href, "http")) continue;  // fragment pseudo-links
        if (visited_.count(e.href) || !enqueued_.insert(e.href).second) continue;
        frontier_.push_back(e.href);
    }

    while (!frontier_.empty()) {
        std::string next;
        if (strategy_ == SearchStrategy::BFS) {
            next = frontier_.front();
            frontier_.pop_front();
        } else {
            next = frontier_.back();
            frontier_.pop_back();
        }
        if (visited_.insert(next).second) {
            scrolled_to_bottom_ = false;
            known_scroll_.reset();
            known_max_.reset();
            return Action::goto_url(next);
        }
    }
    return Action::go_back();
}

void UrlSearchAgent::feedback(const StepFeedback& fb) {
    known_scroll_ = fb.scroll_y;
    known_max_ = fb.max_scroll;
    if (fb.record.url_after != fb.record.url_before) {
        // Redirects (gating, boundary) count as visiting the landing URL too.
        visited_.insert(fb.record.url_after);
        scrolled_to_bottom_ = false;
    }
}

std::string QTableAgent::state_sig(const AgentView& view) const {
    if (view.mode == Mode::Structured) return view.structured->url;
    return view.screen->url + "#" + std::to_string(view.screen->scroll_y / kScrollStep);
}

std::vector<QTableAgent::Candidate> QTableAgent::candidates(const AgentView& view) const {
    std::vector<Candidate> out = {{"scroll_up", Action::scroll_up()},
                                  {"scroll_down", Action::scroll_down()},
                                  {"go_back", Action::go_back()}};
    if (view.mode == Mode::Structured) {
        for (const auto& e : view.structured->elements) {
            if (e.enabled && is_interactive_kind(e.kind)) {
                out.push_back({"click:" + strip_index(e.id), Action::click(e.id)});
            }
        }
    } else {
        if (!view.screen->oracle) {
            throw OracleMissingError("the q-table agent needs the oracle overlay in screen mode");
        }
        for (const auto& item : view.screen->oracle.value()) {
            out.push_back({"click:" + strip_index(item.id), click_center(item.visible_box)});
        }
    }
    return out;
}

double QTableAgent::q_value(const std::string& state_sig, const std::string& action_sig) const {
    auto it = q_.find({state_sig, action_sig});
    return it == q_.end() ? config_.optimistic_init : it->second;
}

int QTableAgent::visit_count(const std::string& state_sig, const std::string& action_sig) const {
    auto it = visits_.find({state_sig, action_sig});
    return it == visits_.end() ? 0 : it->second;
}

Action QTableAgent::act(const AgentView& view) {
    const std::string sig = state_sig(view);
    auto cands = candidates(view);

    // One-step-delayed backup: the successor's action set is only known now.
    if (pending_) {
        double best_next = 0.0;
        for (const auto& c : cands) best_next = std::max(best_next, q_value(sig, c.sig));
        double old = q_value(pending_->first, pending_->second);
        q_[*pending_] = old + config_.alpha * (pending_reward_ + config_.gamma * best_next - old);
        pending_.reset();
    }

    size_t choice = 0;
    if (rng_.real() < config_.epsilon) {
        choice = rng_.below(cands.size());
    } else {
        double best = -1e300;
        std::vector<size_t> best_idx;
        for (size_t i = 0; i < cands.size(); ++i) {
            double q = q_value(sig, cands[i].sig);
            if (q > best + 1e-12) {
                best = q;
                best_idx = {i};
            } else if (q > best - 1e-12) {
                best_idx.push_back(i);
            }
        }
        choice = best_idx[rng_.below(best_idx.size())];
    }

    pending_ = {{sig, cands[choice].sig}};
    visits_[*pending_] += 1;
    pending_reward_ = 0.0;
    return cands[choice].action;
}

void QTableAgent::feedback(const StepFeedback& fb) {
    pending_reward_ = static_cast<double>(fb.new_keys);
}

}  // namespace uilab
