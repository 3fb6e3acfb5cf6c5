#pragma once

#include <map>

#include "uilab/describe.hpp"
#include "uilab/embed.hpp"

namespace uilab {

// Embedding memory for novelty scoring. R holds realized state descriptions,
// P executed state-action pairs; F and C cache candidate embeddings by text
// hash. Memory only grows within a run, so each cached candidate also keeps
// a running max-similarity watermark and rescans only what arrived since.
struct NoveltyMemory {
    struct CachedCandidate {
        std::vector<double> vec;
        double max_similarity = 0.0;
        size_t scanned = 0;
    };

    std::vector<std::vector<double>> realized_states;  // R
    std::vector<std::vector<double>> executed_pairs;   // P
    std::map<uint64_t, CachedCandidate> future_cache;     // F
    std::map<uint64_t, CachedCandidate> candidate_cache;  // C
};

std::string pair_text(const std::string& state_description, const std::string& goal);

// 1 - max cosine similarity between the candidate's predicted-state embedding
// and every realized state. Empty memory means nothing comparable exists, so
// the candidate is maximally novel (1).
double novelty_state(const MacroAction& candidate, NoveltyMemory& memory,
                     const Embedder& embedder);

// Same shape over executed state-action pairs.
double novelty_action(const std::string& candidate_pair_text, NoveltyMemory& memory,
                      const Embedder& embedder);

enum class SelectionSetting { Frontier, Local };

struct SelectionConfig {
    int frontier_filter = 20;
    double local_filter_fraction = 0.30;
    double state_weight = 0.5;  // blend of the two novelty scores
};

// Number of candidates the novelty filter keeps.
int filter_size(SelectionSetting setting, int n_candidates, const SelectionConfig& config);

struct ScoredMacro {
    size_t index = 0;
    double novelty = 0.0;
    int rank = 0;
};

// Two-stage choice: keep the most novel candidates, then take the best
// (lowest) describer rank among them. Ties fall to higher novelty, then to
// proposal order. Returns the index into `candidates`.
size_t choose_novel_macro(const std::string& state_description,
                          const std::vector<MacroAction>& candidates, NoveltyMemory& memory,
                          const Embedder& embedder, SelectionSetting setting,
                          const SelectionConfig& config);

// The same scoring applied to an arbitrary scored pool (used for frontier
// selection across states). Candidates must carry their novelty and rank.
size_t pick_from_filtered(std::vector<ScoredMacro> scored, int keep);

}  // namespace uilab
