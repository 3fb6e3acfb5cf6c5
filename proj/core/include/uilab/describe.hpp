#pragma once

#include <functional>
#include <memory>

#include "uilab/agents.hpp"

namespace uilab {

struct BackendFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A natural-language interaction goal proposed for the current state,
// carrying its predicted landing state and the describer's importance rank
// (1 = most important; ranks are unique within one proposal batch).
struct MacroAction {
    enum class Status { Proposed, Executing, Completed, Failed, BudgetExhausted };

    std::string goal;
    std::string predicted_state;
    int rank = 0;
    std::string origin_sig;   // state signature the proposal came from
    std::string target_hint;  // element id the goal refers to, when there is one
    Status status = Status::Proposed;
};

std::string macro_status_name(MacroAction::Status s);

struct DescribeResult {
    std::string description;
    std::vector<MacroAction> macros;
};

class DescriberBackend {
public:
    virtual ~DescriberBackend() = default;
    virtual DescribeResult describe(const AgentView& view) = 0;
};

// Rule-based describer: renders the page canonically (elements grouped the
// way the functionality metric groups them) and proposes composite flows
// ahead of single-element interactions, external links last.
class DeterministicDescriber : public DescriberBackend {
public:
    DescribeResult describe(const AgentView& view) override;
};

// Tries the primary backend, retries once on failure, then falls back to the
// deterministic describer so a run can always make progress.
class ResilientDescriber : public DescriberBackend {
public:
    explicit ResilientDescriber(std::unique_ptr<DescriberBackend> primary)
        : primary_(std::move(primary)) {}
    DescribeResult describe(const AgentView& view) override;

private:
    std::unique_ptr<DescriberBackend> primary_;
    DeterministicDescriber fallback_;
};

}  // namespace uilab
