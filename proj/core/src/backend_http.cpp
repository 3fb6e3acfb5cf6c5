#include <cstdlib>

#include <httplib.h>

#include "uilab/backend.hpp"
#include "uilab/observation.hpp"

namespace uilab {

namespace {

nlohmann::json post_json(const std::string& endpoint, const std::string& path,
                         const nlohmann::ordered_json& body) {
    httplib::Client client(endpoint);
    client.set_connection_timeout(2, 0);
    client.set_read_timeout(15, 0);
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res || res->status != 200) {
        throw BackendFailure("backend " + endpoint + path + " unavailable");
    }
    try {
        return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw BackendFailure(std::string("backend returned malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string describer_endpoint_from_env() {
    const char* v = std::getenv("UILAB_DESCRIBER_ENDPOINT");
    return v ? std::string(v) : std::string();
}

nlohmann::ordered_json render_view(const AgentView& view) {
    nlohmann::ordered_json j;
    j["mode"] = mode_name(view.mode);
    if (view.mode == Mode::Structured) {
        j["observation"] = structured_to_json(*view.structured);
    } else {
        j["observation"] = screen_to_json(*view.screen);
    }
    return j;
}

HttpDescriber::HttpDescriber(std::string endpoint) : endpoint_(std::move(endpoint)) {}

DescribeResult HttpDescriber::describe(const AgentView& view) {
    nlohmann::ordered_json body = render_view(view);
    body["prompt_template"] = "describer-v1";
    nlohmann::json reply = post_json(endpoint_, "/describe", body);

    DescribeResult res;
    try {
        res.description = reply.at("state").get<std::string>();
        int rank = 0;
        for (const auto& a : reply.at("actions")) {
            MacroAction m;
            if (a.is_string()) {
                m.goal = a.get<std::string>();
                m.predicted_state = m.goal;
            } else {
                m.goal = a.at("goal").get<std::string>();
                m.predicted_state = a.value("predicted", m.goal);
                m.target_hint = a.value("target", "");
            }
            m.rank = ++rank;
            res.macros.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception& e) {
        throw BackendFailure(std::string("describe reply missing fields: ") + e.what());
    }
    if (res.macros.empty()) throw BackendFailure("describe reply proposed no actions");
    return res;
}

HttpActor::HttpActor(std::string endpoint, std::unique_ptr<ActorBackend> fallback)
    : endpoint_(std::move(endpoint)), fallback_(std::move(fallback)) {}

void HttpActor::begin_macro(const MacroAction& macro) {
    history_.clear();
    fell_back_ = false;
    if (fallback_) fallback_->begin_macro(macro);
}

ActorReply HttpActor::next(const MacroAction& macro, const AgentView& view) {
    if (!fell_back_) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            try {
                nlohmann::ordered_json body = render_view(view);
                body["prompt_template"] = "actor-v1";
                body["goal"] = macro.goal;
                body["history"] = history_;
                nlohmann::json reply = post_json(endpoint_, "/act", body);
                ActorReply out;
                out.outcome = reply.value("previous_action_outcome", "");
                out.description = reply.value("action_description", "");
                if (reply.contains("signal")) {
                    std::string signal = reply.at("signal").get<std::string>();
                    out.completed = signal == "completed";
                    out.infeasible = signal == "infeasible";
                    return out;
                }
                out.action = action_from_json(reply.at("action"));
                history_.push_back(out.outcome + " / " + out.description);
                if (history_.size() > 8) history_.erase(history_.begin());
                return out;
            } catch (const BackendFailure&) {
            } catch (const nlohmann::json::exception&) {
            } catch (const ConfigError&) {
            }
        }
        fell_back_ = true;
        if (fallback_) fallback_->begin_macro(macro);
    }
    if (!fallback_) {
        return {"backend unavailable", "giving up on the macro", std::nullopt, false, true};
    }
    return fallback_->next(macro, view);
}

}  // namespace uilab
