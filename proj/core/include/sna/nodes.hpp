#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>

#include "sna/domain.hpp"
#include "sna/envsim.hpp"
#include "sna/rng.hpp"

namespace sna::nodesim {

// Sense-early clock drift, per the observed mote behavior: a node samples
// `mean_ms` before its schedule point on average.
struct DriftParams {
  double mean_ms = 0.0;
  double sigma_ms = 0.0;
};

struct NodeState {
  NodeId node;
  SamplingInterval interval;
  TimeMs next_scheduled_at = 0;
  std::uint64_t seq = 0;        // last emitted measurement
  std::int64_t tx_count = 0;    // measurements + acks, counted at the sender
  DriftParams drift;
  std::unordered_set<std::uint64_t> seen_cmds;
};

struct LinkConfig {
  double loss_prob = 0.0;          // per frame, each direction
  double latency_ms_mean = 0.0;
  double latency_ms_jitter = 0.0;  // uniform half-width around the mean

  void validate() const;
};

struct ReprogramCommand {
  std::uint64_t cmd_id = 0;
  NodeId node;
  SamplingInterval new_interval;
  TimeMs issued_at = 0;
};

struct AckFrame {
  std::uint64_t cmd_id = 0;
  NodeId node;
  SamplingInterval interval;  // interval in force after handling
  bool ok = true;
  std::string detail;
};

// Sensing instant for the pending schedule point, then advances the schedule
// by the interval currently in force. Drift is drawn per sample and clamped
// to [0, interval/2] so samples never reorder.
struct SamplePoint {
  TimeMs scheduled_at = 0;
  TimeMs sensed_at = 0;
};
SamplePoint next_sample_time(NodeState& state, Rng& rng);

// Samples the trace at the sensing instant and accounts for the radio
// transmission whether or not the uplink later drops the frame.
Measurement emit_measurement(NodeState& state, const envsim::Trace& trace,
                             TimeMs scheduled_at, TimeMs sensed_at);

// One frame through the lossy link: nullopt when dropped, otherwise the
// link latency to add to the send time.
std::optional<TimeMs> deliver(const LinkConfig& link, Rng& rng);

// Applies a reprogram command. The already-scheduled sample point is left
// untouched; the new interval takes effect from the following one.
// Duplicate cmd_ids re-ack without state change.
AckFrame handle_reprogram(NodeState& state, const ReprogramCommand& cmd);

// Wire-side entry: validates the raw interval and emits an error ack when it
// is not one of the allowed periods.
AckFrame handle_reprogram_raw(NodeState& state, std::uint64_t cmd_id,
                              std::int32_t interval_s, TimeMs issued_at);

}  // namespace sna::nodesim
