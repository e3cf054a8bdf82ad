#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "sna/domain.hpp"
#include "sna/rng.hpp"

namespace sna::envsim {

// Synthetic office-temperature model: quiet random walk at night, plus an
// air-conditioning sinusoid and occupancy level shifts during office hours.
struct TraceConfig {
  std::uint64_t seed = 1;
  std::int64_t duration_s = 0;
  std::int32_t day_start_s = 8 * 3600;   // seconds-of-day; run epoch is midnight
  std::int32_t day_end_s = 20 * 3600;
  double night_sigma_c = 0.004;          // degC per 1 s walk step
  double day_sigma_c = 0.012;
  std::int32_t ac_period_s = 3600;
  double ac_amplitude_c = 0.25;
  double occupancy_step_prob = 0.008;    // per minute, during day hours
  double occupancy_step_c = 0.8;
  double base_temp_c = 23.0;

  void validate() const;
};

class Trace {
 public:
  // Nearest-second lookup. Valid for 0 <= t_ms <= duration_s*1000; the final
  // schedule point of a run lands exactly on the end boundary, which maps to
  // the last sample.
  double sample_at(NodeId node, TimeMs t_ms) const;

  std::int64_t duration_s() const { return duration_s_; }
  const std::vector<NodeId>& nodes() const { return order_; }
  bool has_node(NodeId node) const { return series_.count(node) != 0; }
  const std::vector<double>& series(NodeId node) const;

  static Trace generate(const TraceConfig& config, const std::vector<NodeId>& nodes);

  // CSV replay, header `t_s,node,value_c`, one row per second per node.
  static Trace from_csv(std::istream& in);
  void to_csv(std::ostream& out) const;

 private:
  std::int64_t duration_s_ = 0;
  std::vector<NodeId> order_;
  std::unordered_map<NodeId, std::vector<double>> series_;
};

// Fraction of consecutive ideal-grid samples (t = interval, 2*interval, ...,
// no drift, no loss) whose delta exceeds the threshold.
double trace_exceedance(const Trace& trace, NodeId node, SamplingInterval interval,
                        const AcceptanceThreshold& threshold);

}  // namespace sna::envsim
