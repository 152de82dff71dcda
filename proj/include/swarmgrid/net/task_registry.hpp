#ifndef SWARMGRID_NET_TASK_REGISTRY_HPP
#define SWARMGRID_NET_TASK_REGISTRY_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "swarmgrid/net/wire.hpp"

namespace swarmgrid::net {

/// Raised by a task handler to fail the entire chunk (the worker answers
/// FailedReply instead of a ChunkResult). Ordinary handler exceptions only
/// fail their own result slot.
class ChunkFailure : public Error {
public:
    using Error::Error;
};

/// State a worker carries across tasks: its name and the shared parameter
/// store that init/broadcast commands write and "evalfn" tasks read.
class WorkerState {
public:
    explicit WorkerState(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    ParamMap shared_params() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return shared_params_;
    }

    void merge_params(const ParamMap& overlay) {
        std::lock_guard<std::mutex> lock(mutex_);
        shared_params_ = shared_params_.merged(overlay);
    }

private:
    std::string name_;
    mutable std::mutex mutex_;
    ParamMap shared_params_;
};

/// Handler for one task kind; returns the result payload.
using TaskHandler = std::function<Json(const Json& payload, WorkerState& state)>;

/// Handler for a command (init, broadcast, run-on-all-threads). thread_index
/// is set when the command runs per pool thread.
using CmdHandler = std::function<void(const Json& payload, WorkerState& state,
                                      std::optional<std::size_t> thread_index)>;

/// Named task-kind registry a worker consults for every incoming task. A
/// chunk containing any unregistered kind is rejected whole.
class TaskRegistry {
public:
    void register_task(const std::string& kind, TaskHandler handler);
    void register_cmd(const std::string& kind, CmdHandler handler);

    bool has_task(const std::string& kind) const;
    bool has_cmd(const std::string& kind) const;

    Json run_task(const std::string& kind, const Json& payload, WorkerState& state) const;
    void run_cmd(const std::string& kind, const Json& payload, WorkerState& state,
                 std::optional<std::size_t> thread_index) const;

    /// Registry with the toolkit's built-in kinds:
    ///   task "evalfn"     {fn, x, params?} -> {"value": f(x)}; the worker's
    ///                     shared params are overlaid by the task's own
    ///   task "noop"       {sleep_ms?, echo?} -> {"echo": ...}
    ///   task "fail"       fails the whole chunk (optionally only on the
    ///                     workers named in payload.workers) - test aid
    ///   cmd  "initparams" {params} -> merged into the shared store
    ///   cmd  "noop"       no effect
    static TaskRegistry with_builtins();

private:
    std::map<std::string, TaskHandler> tasks_;
    std::map<std::string, CmdHandler> cmds_;
};

} // namespace swarmgrid::net

#endif
