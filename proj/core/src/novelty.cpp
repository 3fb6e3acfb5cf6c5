#include "uilab/novelty.hpp"

#include <algorithm>
#include <cmath>

namespace uilab {

namespace {

// Empty memory leaves the vacuous max at 0, i.e. novelty 1.
double one_minus_max_cosine(std::map<uint64_t, NoveltyMemory::CachedCandidate>& cache,
                            const std::string& text,
                            const std::vector<std::vector<double>>& memory,
                            const Embedder& embedder) {
    uint64_t key = fnv1a64(text);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, NoveltyMemory::CachedCandidate{embedder.embed(text), 0.0, 0})
                 .first;
    }
    NoveltyMemory::CachedCandidate& c = it->second;
    for (; c.scanned < memory.size(); ++c.scanned) {
        c.max_similarity = std::max(c.max_similarity,
                                    Embedder::cosine(c.vec, memory[c.scanned]));
    }
    return 1.0 - c.max_similarity;
}

}  // namespace

std::string pair_text(const std::string& state_description, const std::string& goal) {
    return state_description + " => " + goal;
}

double novelty_state(const MacroAction& candidate, NoveltyMemory& memory,
                     const Embedder& embedder) {
    return one_minus_max_cosine(memory.future_cache, candidate.predicted_state,
                                memory.realized_states, embedder);
}

double novelty_action(const std::string& candidate_pair_text, NoveltyMemory& memory,
                      const Embedder& embedder) {
    return one_minus_max_cosine(memory.candidate_cache, candidate_pair_text,
                                memory.executed_pairs, embedder);
}

int filter_size(SelectionSetting setting, int n_candidates, const SelectionConfig& config) {
    if (n_candidates <= 0) return 0;
    if (setting == SelectionSetting::Frontier) {
        return std::min(config.frontier_filter, n_candidates);
    }
    return static_cast<int>(
        std::ceil(config.local_filter_fraction * static_cast<double>(n_candidates)));
}

size_t pick_from_filtered(std::vector<ScoredMacro> scored, int keep) {
    if (scored.empty()) throw std::logic_error("macro selection over an empty candidate set");
    keep = std::clamp(keep, 1, static_cast<int>(scored.size()));

    // Filter stage: most novel first; stable on ties so proposal order holds.
    std::stable_sort(scored.begin(), scored.end(), [](const ScoredMacro& a, const ScoredMacro& b) {
        return a.novelty > b.novelty;
    });
    scored.resize(static_cast<size_t>(keep));

    // Prioritization stage: best (lowest) rank wins; novelty only breaks ties.
    const ScoredMacro* best = &scored.front();
    for (const auto& s : scored) {
        if (s.rank < best->rank ||
            (s.rank == best->rank &&
             (s.novelty > best->novelty ||
              (s.novelty == best->novelty && s.index < best->index)))) {
            best = &s;
        }
    }
    return best->index;
}

size_t choose_novel_macro(const std::string& state_description,
                          const std::vector<MacroAction>& candidates, NoveltyMemory& memory,
                          const Embedder& embedder, SelectionSetting setting,
                          const SelectionConfig& config) {
    if (candidates.empty()) throw std::logic_error("macro selection over an empty candidate set");
    std::vector<ScoredMacro> scored;
    scored.reserve(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i) {
        double ns = novelty_state(candidates[i], memory, embedder);
        double na = novelty_action(pair_text(state_description, candidates[i].goal), memory,
                                   embedder);
        double combined = config.state_weight * ns + (1.0 - config.state_weight) * na;
        scored.push_back({i, combined, candidates[i].rank});
    }
    return pick_from_filtered(std::move(scored),
                              filter_size(setting, static_cast<int>(candidates.size()), config));
}

}  // namespace uilab
