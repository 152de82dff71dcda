#include "swarmgrid/net/task_registry.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "swarmgrid/bench/registry.hpp"

namespace swarmgrid::net {

void TaskRegistry::register_task(const std::string& kind, TaskHandler handler) {
    tasks_[kind] = std::move(handler);
}

void TaskRegistry::register_cmd(const std::string& kind, CmdHandler handler) {
    cmds_[kind] = std::move(handler);
}

bool TaskRegistry::has_task(const std::string& kind) const { return tasks_.count(kind) != 0; }
bool TaskRegistry::has_cmd(const std::string& kind) const { return cmds_.count(kind) != 0; }

Json TaskRegistry::run_task(const std::string& kind, const Json& payload,
                            WorkerState& state) const {
    auto it = tasks_.find(kind);
    if (it == tasks_.end()) throw ChunkFailure("UnknownTaskKind: " + kind);
    return it->second(payload, state);
}

void TaskRegistry::run_cmd(const std::string& kind, const Json& payload, WorkerState& state,
                           std::optional<std::size_t> thread_index) const {
    auto it = cmds_.find(kind);
    if (it == cmds_.end()) throw Error("unknown command kind: " + kind);
    it->second(payload, state, thread_index);
}

TaskRegistry TaskRegistry::with_builtins() {
    TaskRegistry r;

    r.register_task("evalfn", [](const Json& payload, WorkerState& state) -> Json {
        if (!payload.is_object() || !payload.contains("fn") || !payload.contains("x"))
            throw Error("evalfn: payload needs fn and x");
        const std::string fn = payload["fn"].get<std::string>();
        const DenseVector x = vec_from_json(payload["x"]);
        ParamMap params = state.shared_params();
        if (payload.contains("params")) params = params.merged(param_map_from_json(payload["params"]));
        const double v = bench::eval_benchmark(fn, x, params);
        if (!std::isfinite(v)) throw NonFiniteResult("evalfn: non-finite value");
        return Json{{"value", v}};
    });

    r.register_task("noop", [](const Json& payload, WorkerState&) -> Json {
        if (payload.is_object() && payload.contains("sleep_ms"))
            std::this_thread::sleep_for(
                std::chrono::milliseconds(payload["sleep_ms"].get<int>()));
        Json out = Json::object();
        if (payload.is_object() && payload.contains("echo")) out["echo"] = payload["echo"];
        return out;
    });

    r.register_task("fail", [](const Json& payload, WorkerState& state) -> Json {
        if (payload.is_object() && payload.contains("workers")) {
            for (const auto& w : payload["workers"])
                if (w.get<std::string>() == state.name())
                    throw ChunkFailure("fail task matched worker " + state.name());
            return Json{{"skipped", true}};
        }
        throw ChunkFailure("fail task");
    });

    r.register_cmd("initparams", [](const Json& payload, WorkerState& state,
                                    std::optional<std::size_t>) {
        if (!payload.is_object() || !payload.contains("params"))
            throw Error("initparams: payload needs params");
        state.merge_params(param_map_from_json(payload["params"]));
    });

    r.register_cmd("noop", [](const Json&, WorkerState&, std::optional<std::size_t>) {});

    return r;
}

} // namespace swarmgrid::net
