#include "swarmgrid/net/wire.hpp"

#include <array>
#include <utility>

namespace swarmgrid::net {

namespace {

constexpr std::array<std::pair<MsgKind, const char*>, 14> kKindNames = {{
    {MsgKind::HelloClient, "HelloClient"},
    {MsgKind::HelloWorker, "HelloWorker"},
    {MsgKind::AvailabilityQuery, "AvailabilityQuery"},
    {MsgKind::AvailabilityReply, "AvailabilityReply"},
    {MsgKind::SubmitBatch, "SubmitBatch"},
    {MsgKind::ExecuteChunk, "ExecuteChunk"},
    {MsgKind::ChunkResult, "ChunkResult"},
    {MsgKind::OkReply, "OkReply"},
    {MsgKind::FailedReply, "FailedReply"},
    {MsgKind::InitCmd, "InitCmd"},
    {MsgKind::BroadcastCmd, "BroadcastCmd"},
    {MsgKind::RunOnAllThreadsCmd, "RunOnAllThreadsCmd"},
    {MsgKind::ForwardBatch, "ForwardBatch"},
    {MsgKind::BatchResult, "BatchResult"},
}};

} // namespace

const char* to_string(MsgKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

MsgKind msg_kind_from(const std::string& name) {
    for (const auto& [k, n] : kKindNames)
        if (name == n) return k;
    throw ProtocolError("unknown message kind: " + name);
}

Json make_message(MsgKind kind) {
    Json j = Json::object();
    j["v"] = kProtocolVersion;
    j["kind"] = to_string(kind);
    return j;
}

MsgKind kind_of(const Json& message) {
    if (!message.is_object()) throw ProtocolError("message is not a JSON object");
    if (!message.contains("v") || !message["v"].is_number_integer() ||
        message["v"].get<int>() != kProtocolVersion)
        throw ProtocolError("unsupported protocol version");
    if (!message.contains("kind") || !message["kind"].is_string())
        throw ProtocolError("message has no kind");
    return msg_kind_from(message["kind"].get<std::string>());
}

Json task_to_json(const TaskDescriptor& task) {
    return Json{{"tk", task.kind}, {"p", task.payload}};
}

TaskDescriptor task_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tk") || !j["tk"].is_string())
        throw ProtocolError("malformed task descriptor");
    return {j["tk"].get<std::string>(), j.value("p", Json())};
}

Json outcome_to_json(const TaskOutcome& outcome) {
    Json j{{"ok", outcome.ok}, {"w", outcome.worker}};
    if (outcome.ok) {
        j["val"] = outcome.value;
    } else {
        j["err"] = outcome.error;
        j["code"] = outcome.error_code;
    }
    return j;
}

TaskOutcome outcome_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ok")) throw ProtocolError("malformed task outcome");
    TaskOutcome o;
    o.ok = j["ok"].get<bool>();
    o.worker = j.value("w", std::string());
    if (o.ok) {
        o.value = j.value("val", Json());
    } else {
        o.error = j.value("err", std::string());
        o.error_code = j.value("code", std::string());
    }
    return o;
}

Json param_map_to_json(const ParamMap& params) {
    Json j = Json::object();
    for (const auto& [key, value] : params.entries()) {
        Json tagged = Json::object();
        std::visit(
            [&tagged](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::int64_t>)
                    tagged["int"] = v;
                else if constexpr (std::is_same_v<T, double>)
                    tagged["real"] = v;
                else if constexpr (std::is_same_v<T, bool>)
                    tagged["bool"] = v;
                else if constexpr (std::is_same_v<T, std::string>)
                    tagged["str"] = v;
                else
                    tagged["vec"] = v;
            },
            value);
        j[key] = std::move(tagged);
    }
    return j;
}

ParamMap param_map_from_json(const Json& j) {
    if (!j.is_object()) throw ProtocolError("malformed param map");
    ParamMap out;
    for (const auto& [key, tagged] : j.items()) {
        if (!tagged.is_object() || tagged.size() != 1)
            throw ProtocolError("malformed param entry for key " + key);
        if (tagged.contains("int"))
            out.set_int(key, tagged["int"].get<std::int64_t>());
        else if (tagged.contains("real"))
            out.set_real(key, tagged["real"].get<double>());
        else if (tagged.contains("bool"))
            out.set_bool(key, tagged["bool"].get<bool>());
        else if (tagged.contains("str"))
            out.set_str(key, tagged["str"].get<std::string>());
        else if (tagged.contains("vec"))
            out.set_vec(key, tagged["vec"].get<std::vector<double>>());
        else
            throw ProtocolError("unknown param type tag for key " + key);
    }
    return out;
}

Json vec_to_json(const DenseVector& v) {
    Json j = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) j.push_back(v[i]);
    return j;
}

DenseVector vec_from_json(const Json& j) {
    if (!j.is_array()) throw ProtocolError("malformed vector");
    std::vector<double> values;
    values.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw ProtocolError("vector component is not a number");
        values.push_back(e.get<double>());
    }
    return DenseVector(std::move(values));
}

} // namespace swarmgrid::net
