#pragma once

#include <map>
#include <ostream>

#include "uilab/action.hpp"
#include "uilab/describe.hpp"

namespace uilab {

struct KgNode {
    std::string sig;
    std::string url;
    std::string description;
    int visits = 0;
    std::vector<MacroAction> macros;  // statuses persist across re-proposals
};

struct KgEdge {
    std::string src_sig;
    std::string dst_sig;
    std::string goal;
    MacroAction::Status status = MacroAction::Status::Proposed;
    long first_step = 0;  // step indices of the atomic actions, inclusive
    long last_step = 0;   // 0/0 when the macro emitted no action
    std::vector<Action> actions;
};

// The explorer's record of where it has been: one node per distinct state
// description, one edge per executed macro. Persisted as a line-delimited
// record file, the released exploration-dataset format.
class KnowledgeGraph {
public:
    KgNode& ensure_node(const std::string& sig, const std::string& url,
                        const std::string& description);
    const KgNode* find(const std::string& sig) const;

    // Adopt a fresh proposal batch: new goals are appended, known goals keep
    // their execution status.
    void merge_proposals(KgNode& node, const std::vector<MacroAction>& batch);

    void add_edge(KgEdge edge);

    const std::map<std::string, KgNode>& nodes() const { return nodes_; }
    const std::vector<KgEdge>& edges() const { return edges_; }

    const KgNode* least_visited() const;

    void save(std::ostream& out) const;
    static KnowledgeGraph load(std::istream& in);

private:
    std::map<std::string, KgNode> nodes_;
    std::vector<KgEdge> edges_;
};

}  // namespace uilab
