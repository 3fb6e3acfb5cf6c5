#include "uilab/runner.hpp"

#include <filesystem>
#include <fstream>

#include "uilab/backend.hpp"

namespace uilab {

namespace {

bool acting_kind(ActionKind k) {
    return k == ActionKind::Click || k == ActionKind::ClickXY || k == ActionKind::Fill ||
           k == ActionKind::FillXY;
}

AgentView view_of(const Observation& obs, Mode mode) {
    AgentView v;
    v.mode = mode;
    if (mode == Mode::Structured) {
        v.structured = &obs.structured;
    } else {
        v.screen = &obs.screen;
    }
    return v;
}

}  // namespace

RunRecorder::RunRecorder(const SiteGraph& site, EnvState& env, bool oracle, LogWriter* writer,
                         bool full_fidelity)
    : site_(site), env_(env), oracle_(oracle), writer_(writer), full_fidelity_(full_fidelity) {
    trace_structured.mode = Mode::Structured;
    trace_screen.mode = Mode::Screen;
    obs_ = observe(env_, oracle_);
}

int RunRecorder::last_new_keys(Mode mode) const {
    const MetricTrace& t = mode == Mode::Structured ? trace_structured : trace_screen;
    return t.additions.empty() ? 0 : static_cast<int>(t.additions.back().size());
}

void RunRecorder::on_step(const TransitionRecord& rec) {
    // Attribution happens against the page the action was issued on.
    std::optional<FunctionalityKey> acted;
    if (!rec.element_id.empty() && acting_kind(rec.action.kind)) {
        if (const Element* e = obs_.page.find(rec.element_id)) {
            if (e->interactive()) acted = functionality_key(*e, obs_.page, site_.overrides);
        }
    }

    Observation post = observe(env_, oracle_);
    auto struct_keys = functionalities_of(post, Mode::Structured, site_.overrides);
    auto screen_keys = functionalities_of(post, Mode::Screen, site_.overrides);
    DomSnapshot snapshot = dom_snapshot(post.structured, site_.overrides);

    std::set<FunctionalityKey> fresh_struct, fresh_screen;
    for (const auto& k : struct_keys) {
        if (!trace_structured.cumulative.count(k)) fresh_struct.insert(k);
    }
    for (const auto& k : screen_keys) {
        if (!trace_screen.cumulative.count(k)) fresh_screen.insert(k);
    }
    trace_structured.record_step(struct_keys, acted, snapshot);
    trace_screen.record_step(screen_keys, acted);

    if (writer_) {
        StepEntry entry;
        entry.index = rec.step_index;
        entry.action = rec.action;
        entry.element_id = rec.element_id;
        entry.url_before = rec.url_before;
        entry.url_after = rec.url_after;
        entry.malformed = rec.malformed;
        if (acted) entry.acted_key = acted->canonical();
        for (const auto& k : fresh_struct) entry.new_struct_keys.push_back(k.hash());
        for (const auto& k : fresh_screen) entry.new_screen_keys.push_back(k.hash());
        entry.snapshot = snapshot;
        if (full_fidelity_) {
            nlohmann::ordered_json jo;
            jo["structured"] = structured_to_json(post.structured);
            jo["screen"] = screen_to_json(post.screen);
            entry.observation = std::move(jo);
        }
        writer_->add_step(entry);
    }

    obs_ = std::move(post);
}

StepFeedback RunRecorder::last_feedback(const TransitionRecord& rec) const {
    StepFeedback fb;
    fb.record = rec;
    fb.scroll_y = env_.scroll_y;
    fb.max_scroll = obs_.page.max_scroll();
    fb.new_keys = last_new_keys(env_.mode);
    return fb;
}

RunResult run_experiment(const RunManifest& manifest) {
    manifest.validate();

    SiteGraph site;
    if (!manifest.site_file.empty()) {
        std::ifstream in(manifest.site_file);
        if (!in) throw ConfigError("cannot open site file " + manifest.site_file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        site = import_site(text);
    } else {
        site = generate_site(manifest.level, manifest.seed);
    }
    const uint64_t site_fnv = fnv1a64(export_site(site));

    EnvState env = reset(site, manifest.mode);

    std::string kg_path;
    if (manifest.agent == kAgentExplorer) kg_path = manifest.out_path + ".kg.jsonl";

    LogWriter writer(manifest.out_path, manifest, site_fnv, kg_path);
    RunRecorder recorder(site, env, manifest.oracle_effective(), &writer,
                         manifest.obs_fidelity == "full");

    std::string endpoint = manifest.describer_endpoint.empty() ? describer_endpoint_from_env()
                                                               : manifest.describer_endpoint;

    if (manifest.agent == kAgentExplorer) {
        ExploreConfig config;
        config.total_budget = manifest.budget;
        config.atomic_budget_per_macro = ExploreConfig::default_macro_budget(manifest.mode);
        config.seed = manifest.seed;
        if (manifest.ablations.count("nm1")) config.macros_per_episode = 1;
        if (manifest.ablations.count("na2")) config.atomic_budget_per_macro = 2;
        if (manifest.ablations.count("no-priority")) config.ablation_no_priority = true;

        std::unique_ptr<DescriberBackend> describer;
        std::unique_ptr<ActorBackend> actor;
        if (!endpoint.empty()) {
            describer = std::make_unique<ResilientDescriber>(
                std::make_unique<HttpDescriber>(endpoint));
            actor = std::make_unique<HttpActor>(endpoint, std::make_unique<DeterministicActor>());
        } else {
            describer = std::make_unique<DeterministicDescriber>();
            actor = std::make_unique<DeterministicActor>();
        }

        Explorer explorer(manifest.mode, *describer, *actor, config);
        long used = explorer.run(env, [&](const TransitionRecord& rec) { recorder.on_step(rec); });
        (void)used;

        std::ofstream kg_out(kg_path + ".tmp");
        explorer.graph().save(kg_out);
        kg_out.close();
        std::filesystem::rename(kg_path + ".tmp", kg_path);
    } else {
        std::unique_ptr<Agent> agent;
        if (manifest.agent == kAgentRandom) {
            agent = std::make_unique<RandomAgent>(manifest.seed);
        } else if (manifest.agent == kAgentHeuristicRandom) {
            agent = std::make_unique<HeuristicRandomAgent>(manifest.seed);
        } else if (manifest.agent == kAgentBfs) {
            agent = std::make_unique<UrlSearchAgent>(SearchStrategy::BFS);
        } else if (manifest.agent == kAgentDfs) {
            agent = std::make_unique<UrlSearchAgent>(SearchStrategy::DFS);
        } else {
            agent = std::make_unique<QTableAgent>(manifest.seed);
        }

        for (long t = 0; t < manifest.budget; ++t) {
            AgentView view = view_of(recorder.current_observation(), manifest.mode);
            Action action = agent->act(view);
            TransitionRecord rec = step(env, action);
            recorder.on_step(rec);
            agent->feedback(recorder.last_feedback(rec));
        }
    }

    writer.finish(recorder.trace_structured.cumulative_counts,
                  recorder.trace_screen.cumulative_counts,
                  env.mode == Mode::Structured ? recorder.trace_structured.acted_counts
                                               : recorder.trace_screen.acted_counts);

    RunResult result;
    result.log_path = manifest.out_path;
    result.kg_path = kg_path;
    result.trace_structured = std::move(recorder.trace_structured);
    result.trace_screen = std::move(recorder.trace_screen);
    result.steps = env.steps_taken;
    return result;
}

}  // namespace uilab
