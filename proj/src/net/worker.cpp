#include "swarmgrid/net/worker.hpp"

#include "swarmgrid/exec/batch_executor.hpp"
#include "swarmgrid/log.hpp"

namespace swarmgrid::net {

ExecWorker::ExecWorker(std::string host, std::uint16_t worker_port, WorkerOptions options,
                       TaskRegistry registry)
    : host_(std::move(host)),
      port_(worker_port),
      options_(std::move(options)),
      registry_(std::move(registry)),
      state_(options_.name) {
    if (options_.pool_size == 0) throw Error("worker pool size must be positive");
}

ExecWorker::~ExecWorker() {
    stop();
    if (thread_.joinable()) thread_.join();
}

void ExecWorker::run() {
    TcpStream stream = TcpStream::connect(host_, port_);
    {
        std::lock_guard<std::mutex> lock(stream_mutex_);
        if (stopped_.load()) return;
        active_stream_ = &stream;
    }

    try {
        Json hello = make_message(MsgKind::HelloWorker);
        hello["name"] = options_.name;
        hello["threads"] = options_.pool_size;
        stream.send_frame(hello);
        const Json reply = stream.recv_frame();
        if (kind_of(reply) != MsgKind::OkReply)
            throw ProtocolError("worker handshake rejected");
        serve(stream);
    } catch (const ConnectionLost&) {
        log::info("worker", options_.name + ": connection closed");
    } catch (const std::exception& e) {
        log::warn("worker", options_.name + ": " + e.what());
    }

    std::lock_guard<std::mutex> lock(stream_mutex_);
    active_stream_ = nullptr;
}

void ExecWorker::serve(TcpStream& stream) {
    exec::BatchExecutor pool(options_.pool_size);
    for (;;) {
        const Json msg = stream.recv_frame();
        switch (kind_of(msg)) {
        case MsgKind::AvailabilityQuery: {
            Json reply = make_message(MsgKind::AvailabilityReply);
            reply["free_threads"] = options_.pool_size; // serving => idle
            stream.send_frame(reply);
            break;
        }
        case MsgKind::ExecuteChunk:
            stream.send_frame(handle_chunk(msg, pool));
            break;
        case MsgKind::InitCmd:
        case MsgKind::BroadcastCmd: {
            Json reply;
            try {
                const TaskDescriptor cmd = task_from_json(msg.at("cmd"));
                registry_.run_cmd(cmd.kind, cmd.payload, state_, std::nullopt);
                reply = make_message(MsgKind::OkReply);
            } catch (const std::exception& e) {
                reply = make_message(MsgKind::FailedReply);
                reply["reason"] = e.what();
            }
            reply["worker"] = options_.name;
            stream.send_frame(reply);
            break;
        }
        case MsgKind::RunOnAllThreadsCmd: {
            Json reply;
            try {
                const TaskDescriptor cmd = task_from_json(msg.at("cmd"));
                if (!registry_.has_cmd(cmd.kind)) throw Error("unknown command: " + cmd.kind);
                pool.execute_on_all_threads([&](std::size_t thread_index) {
                    registry_.run_cmd(cmd.kind, cmd.payload, state_, thread_index);
                });
                reply = make_message(MsgKind::OkReply);
            } catch (const std::exception& e) {
                reply = make_message(MsgKind::FailedReply);
                reply["reason"] = e.what();
            }
            reply["worker"] = options_.name;
            stream.send_frame(reply);
            break;
        }
        default: {
            Json reply = make_message(MsgKind::FailedReply);
            reply["reason"] = std::string("unexpected message: ") + to_string(kind_of(msg));
            stream.send_frame(reply);
            break;
        }
        }
    }
}

Json ExecWorker::handle_chunk(const Json& msg, exec::BatchExecutor& pool) {
    const std::uint64_t chunk_id = msg.value("chunk_id", 0ull);
    std::vector<TaskDescriptor> tasks;
    for (const auto& t : msg.at("tasks")) tasks.push_back(task_from_json(t));

    // A single unknown kind rejects the whole chunk.
    for (const auto& t : tasks) {
        if (!registry_.has_task(t.kind)) {
            Json reply = make_message(MsgKind::FailedReply);
            reply["chunk_id"] = chunk_id;
            reply["reason"] = "UnknownTaskKind: " + t.kind;
            reply["worker"] = options_.name;
            return reply;
        }
    }

    std::mutex fail_mutex;
    std::string chunk_failure;
    std::vector<std::function<TaskOutcome()>> jobs;
    jobs.reserve(tasks.size());
    for (auto& task : tasks) {
        jobs.emplace_back([this, task, &fail_mutex, &chunk_failure]() -> TaskOutcome {
            try {
                Json value = registry_.run_task(task.kind, task.payload, state_);
                tasks_executed_.fetch_add(1, std::memory_order_relaxed);
                return TaskOutcome::success(std::move(value), options_.name);
            } catch (const ChunkFailure& e) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (chunk_failure.empty()) chunk_failure = e.what();
                return TaskOutcome::failure(e.what(), "chunk", options_.name);
            } catch (const NonFiniteResult& e) {
                return TaskOutcome::failure(e.what(), "nonfinite", options_.name);
            } catch (const UnknownFunction& e) {
                return TaskOutcome::failure(e.what(), "unknown_function", options_.name);
            } catch (const std::exception& e) {
                return TaskOutcome::failure(e.what(), "error", options_.name);
            }
        });
    }

    auto results = pool.execute_batch(std::move(jobs));

    {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!chunk_failure.empty()) {
            Json reply = make_message(MsgKind::FailedReply);
            reply["chunk_id"] = chunk_id;
            reply["reason"] = chunk_failure;
            reply["worker"] = options_.name;
            return reply;
        }
    }

    Json reply = make_message(MsgKind::ChunkResult);
    reply["chunk_id"] = chunk_id;
    Json arr = Json::array();
    for (const auto& r : results) {
        // Job closures trap their own exceptions; a failed slot here means
        // the executor itself refused the job.
        arr.push_back(outcome_to_json(
            r.ok() ? r.value() : TaskOutcome::failure(r.error(), "executor", options_.name)));
    }
    reply["results"] = std::move(arr);
    chunks_executed_.fetch_add(1, std::memory_order_relaxed);
    return reply;
}

void ExecWorker::start() {
    if (thread_.joinable()) throw Error("worker already started");
    thread_ = std::thread([this] { run(); });
}

void ExecWorker::stop() {
    stopped_.store(true);
    std::lock_guard<std::mutex> lock(stream_mutex_);
    if (active_stream_) active_stream_->shutdown_both();
}

} // namespace swarmgrid::net
