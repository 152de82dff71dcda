#ifndef SWARMGRID_NET_WIRE_HPP
#define SWARMGRID_NET_WIRE_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "swarmgrid/errors.hpp"
#include "swarmgrid/param_map.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid::net {

using Json = nlohmann::json;

inline constexpr int kProtocolVersion = 1;

/// Every frame on the wire is a 4-byte big-endian payload length followed by
/// one UTF-8 JSON object {"v":1, "kind":..., ...}. Doubles are emitted with
/// round-trip-exact decimal encoding, so argument vectors and results cross
/// the network bit-for-bit.
enum class MsgKind {
    HelloClient,
    HelloWorker,
    AvailabilityQuery,
    AvailabilityReply,
    SubmitBatch,
    ExecuteChunk,
    ChunkResult,
    OkReply,
    FailedReply,
    InitCmd,
    BroadcastCmd,
    RunOnAllThreadsCmd,
    ForwardBatch,
    BatchResult,
};

const char* to_string(MsgKind kind);
MsgKind msg_kind_from(const std::string& name); // ProtocolError on unknown kinds

/// Fresh message skeleton with version and kind set.
Json make_message(MsgKind kind);

/// Validates version and kind of a decoded frame; ProtocolError otherwise.
MsgKind kind_of(const Json& message);

/// Executable work unit shipped to workers: a registered task-kind name plus
/// its encoded arguments.
struct TaskDescriptor {
    std::string kind;
    Json payload;
};

/// Per-task result slot: a value or a structured failure (with a stable
/// error code), stamped with the executing worker's name.
struct TaskOutcome {
    bool ok = false;
    Json value;
    std::string error;
    std::string error_code;
    std::string worker;

    static TaskOutcome success(Json value, std::string worker = "") {
        TaskOutcome o;
        o.ok = true;
        o.value = std::move(value);
        o.worker = std::move(worker);
        return o;
    }
    static TaskOutcome failure(std::string error, std::string code = "",
                               std::string worker = "") {
        TaskOutcome o;
        o.error = std::move(error);
        o.error_code = std::move(code);
        o.worker = std::move(worker);
        return o;
    }
};

Json task_to_json(const TaskDescriptor& task);
TaskDescriptor task_from_json(const Json& j);

Json outcome_to_json(const TaskOutcome& outcome);
TaskOutcome outcome_from_json(const Json& j);

/// Type-tagged ParamMap encoding ({"key":{"int":5}, ...}) so int/real/bool/
/// str/vec distinctions survive the trip.
Json param_map_to_json(const ParamMap& params);
ParamMap param_map_from_json(const Json& j);

Json vec_to_json(const DenseVector& v);
DenseVector vec_from_json(const Json& j);

} // namespace swarmgrid::net

#endif
