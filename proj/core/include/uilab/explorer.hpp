#pragma once

#include <functional>

#include "uilab/actor.hpp"
#include "uilab/knowledge_graph.hpp"
#include "uilab/novelty.hpp"

namespace uilab {

struct ExploreConfig {
    int macros_per_episode = 4;       // N_M: local macros between frontier teleports
    int atomic_budget_per_macro = 6;  // N_A: 6 structured / 12 screen by convention
    long total_budget = 2000;
    int embedding_dim = 256;
    SelectionConfig selection;
    bool embed_failed_macros = false;   // when false, failed macros stay retryable
    bool ablation_no_priority = false;  // uniform macro choice, no novelty or rank
    uint64_t seed = 0;                  // feeds the no-priority ablation draw

    static int default_macro_budget(Mode mode) { return mode == Mode::Structured ? 6 : 12; }
};

// Hierarchical novelty-driven exploration: describe the state, pick the most
// important among the most novel macro proposals, let the actor spend up to
// N_A atomic actions on it, and every N_M macros teleport to the most
// promising recorded frontier. Teleports consume budget like any action.
class Explorer {
public:
    Explorer(Mode mode, DescriberBackend& describer, ActorBackend& actor, ExploreConfig config);

    using StepSink = std::function<void(const TransitionRecord&)>;
    long run(EnvState& env, const StepSink& on_step);

    const KnowledgeGraph& graph() const { return graph_; }
    const NoveltyMemory& memory() const { return memory_; }

private:
    struct FrontierChoice {
        std::string url;
        std::string goal;
    };
    FrontierChoice choose_frontier();
    size_t choose_local(const KgNode& node, const std::vector<size_t>& candidate_idx);

    Mode mode_;
    DescriberBackend& describer_;
    ActorBackend& actor_;
    ExploreConfig config_;
    Embedder embedder_;
    KnowledgeGraph graph_;
    NoveltyMemory memory_;
    Rng rng_;
};

}  // namespace uilab
