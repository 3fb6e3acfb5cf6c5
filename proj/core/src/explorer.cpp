#include "uilab/explorer.hpp"

#include "uilab/observation.hpp"

namespace uilab {

namespace {

struct ViewHolder {
    Observation obs;
    AgentView view;
};

ViewHolder make_view(const EnvState& env, Mode mode) {
    ViewHolder h{observe(env, false), {}};
    h.view.mode = mode;
    if (mode == Mode::Structured) {
        h.view.structured = &h.obs.structured;
    } else {
        h.view.screen = &h.obs.screen;
    }
    return h;
}

std::string state_signature(const std::string& description) {
    return to_hex(fnv1a64(description));
}

}  // namespace

Explorer::Explorer(Mode mode, DescriberBackend& describer, ActorBackend& actor,
                   ExploreConfig config)
    : mode_(mode),
      describer_(describer),
      actor_(actor),
      config_(config),
      embedder_(config.embedding_dim),
      rng_(config.seed ^ 0xe9c0de5eULL) {}

size_t Explorer::choose_local(const KgNode& node, const std::vector<size_t>& candidate_idx) {
    if (config_.ablation_no_priority) {
        return candidate_idx[rng_.below(candidate_idx.size())];
    }
    std::vector<MacroAction> candidates;
    candidates.reserve(candidate_idx.size());
    for (size_t i : candidate_idx) candidates.push_back(node.macros[i]);
    size_t picked = choose_novel_macro(node.description, candidates, memory_, embedder_,
                                       SelectionSetting::Local, config_.selection);
    return candidate_idx[picked];
}

Explorer::FrontierChoice Explorer::choose_frontier() {
    struct PoolEntry {
        const KgNode* node;
        const MacroAction* macro;
    };
    std::vector<PoolEntry> pool;
    for (const auto& [sig, node] : graph_.nodes()) {
        for (const auto& m : node.macros) {
            if (m.status == MacroAction::Status::Proposed) pool.push_back({&node, &m});
        }
    }
    if (pool.empty()) {
        // Everything proposed has been tried; revisit the least explored
        // state and let the fresh describe there re-open a batch.
        const KgNode* node = graph_.least_visited();
        return {node ? node->url : std::string(kLandingUrl), ""};
    }
    if (config_.ablation_no_priority) {
        const auto& e = pool[rng_.below(pool.size())];
        return {e.node->url, e.macro->goal};
    }
    std::vector<ScoredMacro> scored;
    scored.reserve(pool.size());
    for (size_t i = 0; i < pool.size(); ++i) {
        double ns = novelty_state(*pool[i].macro, memory_, embedder_);
        double na = novelty_action(pair_text(pool[i].node->description, pool[i].macro->goal),
                                   memory_, embedder_);
        double combined = config_.selection.state_weight * ns +
                          (1.0 - config_.selection.state_weight) * na;
        scored.push_back({i, combined, pool[i].macro->rank});
    }
    int keep = std::min(config_.selection.frontier_filter, static_cast<int>(pool.size()));
    size_t best = pick_from_filtered(std::move(scored), keep);
    return {pool[best].node->url, pool[best].macro->goal};
}

long Explorer::run(EnvState& env, const StepSink& on_step) {
    long used = 0;
    auto do_step = [&](const Action& a) {
        TransitionRecord rec = step(env, a);
        ++used;
        if (on_step) on_step(rec);
    };

    while (used < config_.total_budget) {
        for (int episode = 0; episode < config_.macros_per_episode && used < config_.total_budget;
             ++episode) {
            ViewHolder here = make_view(env, mode_);
            DescribeResult described = describer_.describe(here.view);
            std::string sig = state_signature(described.description);
            KgNode& node = graph_.ensure_node(sig, env.url, described.description);
            node.visits += 1;
            graph_.merge_proposals(node, described.macros);
            if (node.macros.empty()) continue;

            std::vector<size_t> candidates;
            for (size_t i = 0; i < node.macros.size(); ++i) {
                auto s = node.macros[i].status;
                if (s == MacroAction::Status::Proposed ||
                    s == MacroAction::Status::BudgetExhausted) {
                    candidates.push_back(i);
                }
            }
            if (candidates.empty()) {
                // Nothing untried left here; the whole batch becomes fair game.
                for (size_t i = 0; i < node.macros.size(); ++i) candidates.push_back(i);
            }
            size_t chosen = choose_local(node, candidates);
            MacroAction macro = node.macros[chosen];
            node.macros[chosen].status = MacroAction::Status::Executing;
            actor_.begin_macro(macro);

            KgEdge edge;
            edge.src_sig = sig;
            edge.goal = macro.goal;
            edge.first_step = env.steps_taken + 1;

            MacroAction::Status status = MacroAction::Status::BudgetExhausted;
            int steps_in_macro = 0;
            while (steps_in_macro < config_.atomic_budget_per_macro &&
                   used < config_.total_budget) {
                ViewHolder now = make_view(env, mode_);
                ActorReply reply = actor_.next(macro, now.view);
                if (reply.completed) {
                    status = MacroAction::Status::Completed;
                    break;
                }
                if (reply.infeasible || !reply.action) {
                    status = MacroAction::Status::Failed;
                    break;
                }
                do_step(*reply.action);
                edge.actions.push_back(*reply.action);
                ++steps_in_macro;
            }
            if (status == MacroAction::Status::BudgetExhausted) {
                // The loop ended on budget; a zero-cost peek may still reveal
                // that the goal was in fact reached by the final action.
                ViewHolder now = make_view(env, mode_);
                ActorReply reply = actor_.next(macro, now.view);
                if (reply.completed) status = MacroAction::Status::Completed;
            }

            ViewHolder after = make_view(env, mode_);
            DescribeResult landed = describer_.describe(after.view);
            std::string dst_sig = state_signature(landed.description);
            graph_.ensure_node(dst_sig, env.url, landed.description);

            edge.dst_sig = dst_sig;
            edge.status = status;
            edge.last_step = env.steps_taken;
            if (edge.actions.empty()) {
                edge.first_step = 0;
                edge.last_step = 0;
            }
            graph_.add_edge(std::move(edge));
            node.macros[chosen].status = status;

            memory_.realized_states.push_back(embedder_.embed(landed.description));
            if (status == MacroAction::Status::Completed || config_.embed_failed_macros) {
                memory_.executed_pairs.push_back(
                    embedder_.embed(pair_text(node.description, macro.goal)));
            }
        }
        if (used >= config_.total_budget) break;
        FrontierChoice frontier = choose_frontier();
        do_step(Action::goto_url(frontier.url));
    }
    return used;
}

}  // namespace uilab
