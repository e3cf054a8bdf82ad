#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sna/domain.hpp"

namespace sna::wire {

// One JSON object per LF-terminated line. Field names are part of the
// protocol: type, node, seq, value_c, scheduled_at, sensed_at, received_at,
// cmd_id, interval_s, filter. Unknown fields are ignored on parse.

struct MeasurementMsg {
  NodeId node;
  std::uint64_t seq = 0;
  double value_c = 0.0;
  TimeMs scheduled_at = 0;
  TimeMs sensed_at = 0;
  bool operator==(const MeasurementMsg&) const = default;
};

struct SubscribeMsg {
  // nullopt subscribes to every node.
  std::optional<std::vector<NodeId>> filter;
  bool operator==(const SubscribeMsg&) const = default;
};

struct EventMsg {
  NodeId node;
  std::uint64_t seq = 0;
  double value_c = 0.0;
  TimeMs scheduled_at = 0;
  TimeMs sensed_at = 0;
  TimeMs received_at = 0;
  bool operator==(const EventMsg&) const = default;
};

struct RecommendationMsg {
  NodeId node;
  std::int32_t interval_s = 0;
  std::uint64_t seq = 0;  // seq of the measurement the recommendation is based on
  bool operator==(const RecommendationMsg&) const = default;
};

struct ReprogramMsg {
  std::uint64_t cmd_id = 0;
  NodeId node;
  std::int32_t interval_s = 0;
  bool operator==(const ReprogramMsg&) const = default;
};

struct AckMsg {
  std::uint64_t cmd_id = 0;
  NodeId node;
  std::int32_t interval_s = 0;
  bool operator==(const AckMsg&) const = default;
};

struct ErrorMsg {
  std::string detail;
  std::optional<std::uint64_t> cmd_id;
  bool operator==(const ErrorMsg&) const = default;
};

using Message = std::variant<MeasurementMsg, SubscribeMsg, EventMsg,
                             RecommendationMsg, ReprogramMsg, AckMsg, ErrorMsg>;

// Single line, no trailing LF; the transport appends it.
std::string serialize(const Message& msg);

// Throws ProtocolError on malformed JSON, missing fields, or unknown type.
Message parse_line(std::string_view line);

Message measurement_to_msg(const Measurement& m);
Message event_to_msg(const Measurement& m);  // requires received_at
Measurement event_to_measurement(const EventMsg& e);

}  // namespace sna::wire
