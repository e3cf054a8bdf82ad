#include "sna/nodes.hpp"

#include <algorithm>
#include <cmath>

namespace sna::nodesim {

void LinkConfig::validate() const {
  if (loss_prob < 0.0 || loss_prob >= 1.0) {
    throw ConfigError("link: loss_prob must be in [0,1)");
  }
  if (latency_ms_mean < 0.0 || latency_ms_jitter < 0.0) {
    throw ConfigError("link: latencies must be >= 0");
  }
}

SamplePoint next_sample_time(NodeState& state, Rng& rng) {
  const TimeMs scheduled = state.next_scheduled_at;
  double drift = rng.normal(state.drift.mean_ms, state.drift.sigma_ms);
  drift = std::clamp(drift, 0.0, static_cast<double>(state.interval.millis()) / 2.0);
  const TimeMs sensed = scheduled - static_cast<TimeMs>(std::llround(drift));
  state.next_scheduled_at = scheduled + state.interval.millis();
  return SamplePoint{scheduled, sensed};
}

Measurement emit_measurement(NodeState& state, const envsim::Trace& trace,
                             TimeMs scheduled_at, TimeMs sensed_at) {
  Measurement m;
  m.node = state.node;
  m.seq = ++state.seq;
  m.value_c = trace.sample_at(state.node, sensed_at);
  m.scheduled_at = scheduled_at;
  m.sensed_at = sensed_at;
  ++state.tx_count;
  return m;
}

std::optional<TimeMs> deliver(const LinkConfig& link, Rng& rng) {
  if (rng.bernoulli(link.loss_prob)) return std::nullopt;
  const double latency = link.latency_ms_mean +
                         link.latency_ms_jitter * rng.uniform(-1.0, 1.0);
  return static_cast<TimeMs>(std::llround(std::max(0.0, latency)));
}

AckFrame handle_reprogram(NodeState& state, const ReprogramCommand& cmd) {
  if (cmd.node != state.node) {
    throw ContractError("handle_reprogram: command for node " +
                        std::to_string(cmd.node.value) + " reached node " +
                        std::to_string(state.node.value));
  }
  const bool duplicate = !state.seen_cmds.insert(cmd.cmd_id).second;
  if (!duplicate) {
    state.interval = cmd.new_interval;
  }
  ++state.tx_count;  // the ack frame
  return AckFrame{cmd.cmd_id, state.node, state.interval, true, {}};
}

AckFrame handle_reprogram_raw(NodeState& state, std::uint64_t cmd_id,
                              std::int32_t interval_s, TimeMs issued_at) {
  const auto interval = SamplingInterval::from_seconds(interval_s);
  if (!interval) {
    ++state.tx_count;  // error acks are transmissions too
    return AckFrame{cmd_id, state.node, state.interval, false,
                    "interval_s not in allowed set: " + std::to_string(interval_s)};
  }
  return handle_reprogram(state, ReprogramCommand{cmd_id, state.node, *interval, issued_at});
}

}  // namespace sna::nodesim
