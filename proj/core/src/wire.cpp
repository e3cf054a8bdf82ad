#include "sna/wire.hpp"

#include <nlohmann/json.hpp>

namespace sna::wire {

using ordered_json = nlohmann::ordered_json;

namespace {

std::int64_t get_int(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    throw ProtocolError(std::string("missing or non-integer field: ") + key);
  }
  return it->get<std::int64_t>();
}

std::uint64_t get_uint(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer() || it->is_number_float()) {
    throw ProtocolError(std::string("missing or non-integer field: ") + key);
  }
  return it->get<std::uint64_t>();
}

double get_number(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw ProtocolError(std::string("missing or non-numeric field: ") + key);
  }
  return it->get<double>();
}

NodeId get_node(const ordered_json& j) {
  return NodeId{static_cast<std::int32_t>(get_int(j, "node"))};
}

}  // namespace

std::string serialize(const Message& msg) {
  ordered_json j;
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MeasurementMsg>) {
          j["type"] = "measurement";
          j["node"] = m.node.value;
          j["seq"] = m.seq;
          j["value_c"] = m.value_c;
          j["scheduled_at"] = m.scheduled_at;
          j["sensed_at"] = m.sensed_at;
        } else if constexpr (std::is_same_v<T, SubscribeMsg>) {
          j["type"] = "subscribe";
          if (m.filter) {
            auto arr = ordered_json::array();
            for (const NodeId n : *m.filter) arr.push_back(n.value);
            j["filter"] = std::move(arr);
          }
        } else if constexpr (std::is_same_v<T, EventMsg>) {
          j["type"] = "event";
          j["node"] = m.node.value;
          j["seq"] = m.seq;
          j["value_c"] = m.value_c;
          j["scheduled_at"] = m.scheduled_at;
          j["sensed_at"] = m.sensed_at;
          j["received_at"] = m.received_at;
        } else if constexpr (std::is_same_v<T, RecommendationMsg>) {
          j["type"] = "recommendation";
          j["node"] = m.node.value;
          j["seq"] = m.seq;
          j["interval_s"] = m.interval_s;
        } else if constexpr (std::is_same_v<T, ReprogramMsg>) {
          j["type"] = "reprogram";
          j["cmd_id"] = m.cmd_id;
          j["node"] = m.node.value;
          j["interval_s"] = m.interval_s;
        } else if constexpr (std::is_same_v<T, AckMsg>) {
          j["type"] = "ack";
          j["cmd_id"] = m.cmd_id;
          j["node"] = m.node.value;
          j["interval_s"] = m.interval_s;
        } else if constexpr (std::is_same_v<T, ErrorMsg>) {
          j["type"] = "error";
          if (m.cmd_id) j["cmd_id"] = *m.cmd_id;
          j["detail"] = m.detail;
        }
      },
      msg);
  return j.dump();
}

Message parse_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("bad json: ") + e.what());
  }
  if (!j.is_object()) throw ProtocolError("message is not a json object");
  const auto type_it = j.find("type");
  if (type_it == j.end() || !type_it->is_string()) {
    throw ProtocolError("missing type field");
  }
  const std::string type = type_it->get<std::string>();

  if (type == "measurement") {
    MeasurementMsg m;
    m.node = get_node(j);
    m.seq = get_uint(j, "seq");
    m.value_c = get_number(j, "value_c");
    m.scheduled_at = get_int(j, "scheduled_at");
    m.sensed_at = get_int(j, "sensed_at");
    return m;
  }
  if (type == "subscribe") {
    SubscribeMsg m;
    const auto it = j.find("filter");
    if (it != j.end()) {
      if (!it->is_array()) throw ProtocolError("filter must be an array");
      std::vector<NodeId> nodes;
      for (const auto& v : *it) {
        if (!v.is_number_integer()) throw ProtocolError("filter entries must be node ids");
        nodes.push_back(NodeId{v.get<std::int32_t>()});
      }
      m.filter = std::move(nodes);
    }
    return m;
  }
  if (type == "event") {
    EventMsg m;
    m.node = get_node(j);
    m.seq = get_uint(j, "seq");
    m.value_c = get_number(j, "value_c");
    m.scheduled_at = get_int(j, "scheduled_at");
    m.sensed_at = get_int(j, "sensed_at");
    m.received_at = get_int(j, "received_at");
    return m;
  }
  if (type == "recommendation") {
    RecommendationMsg m;
    m.node = get_node(j);
    m.interval_s = static_cast<std::int32_t>(get_int(j, "interval_s"));
    m.seq = get_uint(j, "seq");
    return m;
  }
  if (type == "reprogram") {
    ReprogramMsg m;
    m.cmd_id = get_uint(j, "cmd_id");
    m.node = get_node(j);
    m.interval_s = static_cast<std::int32_t>(get_int(j, "interval_s"));
    return m;
  }
  if (type == "ack") {
    AckMsg m;
    m.cmd_id = get_uint(j, "cmd_id");
    m.node = get_node(j);
    m.interval_s = static_cast<std::int32_t>(get_int(j, "interval_s"));
    return m;
  }
  if (type == "error") {
    ErrorMsg m;
    const auto it = j.find("detail");
    if (it != j.end() && it->is_string()) m.detail = it->get<std::string>();
    const auto cit = j.find("cmd_id");
    if (cit != j.end() && cit->is_number_integer()) m.cmd_id = cit->get<std::uint64_t>();
    return m;
  }
  throw ProtocolError("unknown type: " + type);
}

Message measurement_to_msg(const Measurement& m) {
  return MeasurementMsg{m.node, m.seq, m.value_c, m.scheduled_at, m.sensed_at};
}

Message event_to_msg(const Measurement& m) {
  if (!m.received_at) {
    throw ContractError("event_to_msg: measurement has no received_at");
  }
  return EventMsg{m.node, m.seq, m.value_c, m.scheduled_at, m.sensed_at, *m.received_at};
}

Measurement event_to_measurement(const EventMsg& e) {
  Measurement m;
  m.node = e.node;
  m.seq = e.seq;
  m.value_c = e.value_c;
  m.scheduled_at = e.scheduled_at;
  m.sensed_at = e.sensed_at;
  m.received_at = e.received_at;
  return m;
}

}  // namespace sna::wire
