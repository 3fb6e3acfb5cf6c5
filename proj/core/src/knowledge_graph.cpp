#include "uilab/knowledge_graph.hpp"

#include <json.hpp>

namespace uilab {

namespace {

MacroAction::Status parse_status(const std::string& s) {
    for (auto st : {MacroAction::Status::Proposed, MacroAction::Status::Executing,
                    MacroAction::Status::Completed, MacroAction::Status::Failed,
                    MacroAction::Status::BudgetExhausted}) {
        if (macro_status_name(st) == s) return st;
    }
    throw ConfigError("unknown macro status: " + s);
}

}  // namespace

KgNode& KnowledgeGraph::ensure_node(const std::string& sig, const std::string& url,
                                    const std::string& description) {
    auto [it, fresh] = nodes_.try_emplace(sig);
    if (fresh) {
        it->second.sig = sig;
        it->second.url = url;
        it->second.description = description;
    }
    return it->second;
}

const KgNode* KnowledgeGraph::find(const std::string& sig) const {
    auto it = nodes_.find(sig);
    return it == nodes_.end() ? nullptr : &it->second;
}

void KnowledgeGraph::merge_proposals(KgNode& node, const std::vector<MacroAction>& batch) {
    for (const auto& m : batch) {
        bool known = false;
        for (const auto& existing : node.macros) known = known || existing.goal == m.goal;
        if (!known) {
            node.macros.push_back(m);
            node.macros.back().origin_sig = node.sig;
        }
    }
}

void KnowledgeGraph::add_edge(KgEdge edge) {
    edges_.push_back(std::move(edge));
}

const KgNode* KnowledgeGraph::least_visited() const {
    const KgNode* best = nullptr;
    for (const auto& [sig, node] : nodes_) {
        if (!best || node.visits < best->visits) best = &node;
    }
    return best;
}

void KnowledgeGraph::save(std::ostream& out) const {
    for (const auto& [sig, node] : nodes_) {
        nlohmann::ordered_json j;
        j["type"] = "node";
        j["sig"] = node.sig;
        j["url"] = node.url;
        j["description"] = node.description;
        j["visits"] = node.visits;
        auto macros = nlohmann::ordered_json::array();
        for (const auto& m : node.macros) {
            macros.push_back({{"goal", m.goal},
                              {"predicted", m.predicted_state},
                              {"rank", m.rank},
                              {"status", macro_status_name(m.status)}});
        }
        j["macros"] = std::move(macros);
        out << j.dump() << "\n";
    }
    for (const auto& e : edges_) {
        nlohmann::ordered_json j;
        j["type"] = "edge";
        j["src"] = e.src_sig;
        j["dst"] = e.dst_sig;
        j["goal"] = e.goal;
        j["status"] = macro_status_name(e.status);
        j["first_step"] = e.first_step;
        j["last_step"] = e.last_step;
        auto actions = nlohmann::ordered_json::array();
        for (const auto& a : e.actions) actions.push_back(action_to_json(a));
        j["actions"] = std::move(actions);
        out << j.dump() << "\n";
    }
}

KnowledgeGraph KnowledgeGraph::load(std::istream& in) {
    KnowledgeGraph g;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (j.at("type") == "node") {
            KgNode node;
            node.sig = j.at("sig").get<std::string>();
            node.url = j.at("url").get<std::string>();
            node.description = j.at("description").get<std::string>();
            node.visits = j.value("visits", 0);
            for (const auto& jm : j.value("macros", nlohmann::json::array())) {
                MacroAction m;
                m.goal = jm.at("goal").get<std::string>();
                m.predicted_state = jm.value("predicted", "");
                m.rank = jm.value("rank", 0);
                m.status = parse_status(jm.value("status", "proposed"));
                m.origin_sig = node.sig;
                node.macros.push_back(std::move(m));
            }
            g.nodes_[node.sig] = std::move(node);
        } else {
            KgEdge e;
            e.src_sig = j.at("src").get<std::string>();
            e.dst_sig = j.at("dst").get<std::string>();
            e.goal = j.at("goal").get<std::string>();
            e.status = parse_status(j.value("status", "completed"));
            e.first_step = j.value("first_step", 0L);
            e.last_step = j.value("last_step", 0L);
            for (const auto& ja : j.value("actions", nlohmann::json::array())) {
                e.actions.push_back(action_from_json(ja));
            }
            g.edges_.push_back(std::move(e));
        }
    }
    return g;
}

}  // namespace uilab
