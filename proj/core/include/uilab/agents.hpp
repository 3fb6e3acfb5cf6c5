#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "uilab/observation.hpp"

namespace uilab {

struct OracleMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// What an agent is allowed to see: exactly one mode's observation. The
// screen observation carries the oracle overlay only for agents granted it.
struct AgentView {
    Mode mode = Mode::Structured;
    const StructuredObservation* structured = nullptr;
    const ScreenObservation* screen = nullptr;
};

// Runtime feedback after each step. new_keys is the count of functionalities
// first revealed by this step under the run's mode; scroll fields mirror
// what a real browser exposes through window.scrollY.
struct StepFeedback {
    TransitionRecord record;
    int scroll_y = 0;
    int max_scroll = 0;
    int new_keys = 0;
};

class Agent {
public:
    virtual ~Agent() = default;
    virtual Action act(const AgentView& view) = 0;
    virtual void feedback(const StepFeedback&) {}
};

// Uniform over {scroll_up, scroll_down, go_back} plus a click per DOM
// element in Structured mode; weighted scroll/back/click-a-pixel in Screen
// mode. include_fill adds fill-with-probe actions for text inputs in
// Structured mode (off by default to match the reference action list).
class RandomAgent : public Agent {
public:
    explicit RandomAgent(uint64_t seed, bool include_fill = false)
        : rng_(seed), include_fill_(include_fill) {}
    Action act(const AgentView& view) override;

    static constexpr double kScrollUpWeight = 0.09;
    static constexpr double kScrollDownWeight = 0.09;
    static constexpr double kGoBackWeight = 0.02;
    static constexpr double kClickWeight = 0.80;

private:
    Rng rng_;
    bool include_fill_;
};

// Oracle baseline: uniform over clicks on interactive elements plus the
// three navigation actions. Screen-mode clicks aim at the center of each
// visible oracle box.
class HeuristicRandomAgent : public Agent {
public:
    explicit HeuristicRandomAgent(uint64_t seed) : rng_(seed) {}
    Action act(const AgentView& view) override;

private:
    Rng rng_;
};

enum class SearchStrategy { BFS, DFS };

// Structured-mode URL-space search. Scrolls each page to the bottom (so
// screen-countable content is surfaced), harvests hyperlinks, then teleports
// to the next frontier URL; never revisits.
class UrlSearchAgent : public Agent {
public:
    explicit UrlSearchAgent(SearchStrategy strategy) : strategy_(strategy) {}
    Action act(const AgentView& view) override;
    void feedback(const StepFeedback& fb) override;

    const std::set<std::string>& visited() const { return visited_; }

private:
    SearchStrategy strategy_;
    std::deque<std::string> frontier_;
    std::set<std::string> enqueued_;
    std::set<std::string> visited_;
    bool scrolled_to_bottom_ = false;
    std::optional<int> known_scroll_;
    std::optional<int> known_max_;
};

struct QTableConfig {
    double alpha = 0.5;
    double gamma = 0.9;
    double epsilon = 0.1;
    double optimistic_init = 1.0;
};

// Tabular Q-learning explorer in the style of GUI-Bee, without the
// model-based Q re-estimation step. Needs oracle element identities; rewards
// are the per-step counts of newly observed functionalities.
class QTableAgent : public Agent {
public:
    QTableAgent(uint64_t seed, QTableConfig config = {}) : rng_(seed), config_(config) {}
    Action act(const AgentView& view) override;
    void feedback(const StepFeedback& fb) override;

    double q_value(const std::string& state_sig, const std::string& action_sig) const;
    int visit_count(const std::string& state_sig, const std::string& action_sig) const;

private:
    struct Candidate {
        std::string sig;
        Action action;
    };
    std::vector<Candidate> candidates(const AgentView& view) const;
    std::string state_sig(const AgentView& view) const;

    Rng rng_;
    QTableConfig config_;
    std::map<std::pair<std::string, std::string>, double> q_;
    std::map<std::pair<std::string, std::string>, int> visits_;
    std::optional<std::pair<std::string, std::string>> pending_;
    double pending_reward_ = 0.0;
};

}  // namespace uilab
