#ifndef SWARMGRID_NET_WORKER_HPP
#define SWARMGRID_NET_WORKER_HPP

#include <atomic>
#include <memory>
#include <mutex>
#include <thread>

#include "swarmgrid/net/socket.hpp"
#include "swarmgrid/net/task_registry.hpp"

namespace swarmgrid::net {

struct WorkerOptions {
    std::string name = "worker";
    std::size_t pool_size = 4;
};

/// Worker node: connects to a server's worker port, then serves availability
/// queries, chunk executions (through a local fixed-size batch executor),
/// and init/broadcast/run-on-all-threads commands until the connection goes
/// away. Rejoining after a disconnect is a brand-new worker identity.
class ExecWorker {
public:
    ExecWorker(std::string host, std::uint16_t worker_port, WorkerOptions options,
               TaskRegistry registry = TaskRegistry::with_builtins());
    ~ExecWorker();

    /// Blocking service loop; returns when the connection is lost or stop()
    /// was called.
    void run();

    /// Runs the service loop on an internal thread.
    void start();

    /// Shuts the connection down immediately from any thread. Called while a
    /// chunk is executing, the chunk's results never reach the server - this
    /// is how tests simulate a worker dying mid-batch.
    void stop();

    const std::string& name() const { return options_.name; }
    std::size_t chunks_executed() const { return chunks_executed_.load(); }
    std::size_t tasks_executed() const { return tasks_executed_.load(); }

private:
    void serve(TcpStream& stream);
    Json handle_chunk(const Json& msg, exec::BatchExecutor& pool);

    std::string host_;
    std::uint16_t port_;
    WorkerOptions options_;
    TaskRegistry registry_;
    WorkerState state_;

    std::mutex stream_mutex_;
    TcpStream* active_stream_ = nullptr;
    std::atomic<bool> stopped_{false};
    std::thread thread_;
    std::atomic<std::size_t> chunks_executed_{0};
    std::atomic<std::size_t> tasks_executed_{0};
};

} // namespace swarmgrid::net

#endif
