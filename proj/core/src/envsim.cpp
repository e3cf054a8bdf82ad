#include "sna/envsim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "text_util.hpp"

namespace sna::envsim {

void TraceConfig::validate() const {
  if (duration_s <= 0) throw ConfigError("trace: duration_s must be > 0");
  if (night_sigma_c < 0 || day_sigma_c < 0) {
    throw ConfigError("trace: sigmas must be >= 0");
  }
  if (day_start_s < 0 || day_start_s >= day_end_s || day_end_s > 86400) {
    throw ConfigError("trace: need 0 <= day_start < day_end <= 86400");
  }
  if (ac_period_s <= 0) throw ConfigError("trace: ac_period_s must be > 0");
  if (ac_amplitude_c < 0) throw ConfigError("trace: ac_amplitude_c must be >= 0");
  if (occupancy_step_prob < 0 || occupancy_step_prob > 1) {
    throw ConfigError("trace: occupancy_step_prob must be in [0,1]");
  }
  if (occupancy_step_c < 0) throw ConfigError("trace: occupancy_step_c must be >= 0");
  if (!std::isfinite(base_temp_c)) throw ConfigError("trace: base_temp_c not finite");
}

double Trace::sample_at(NodeId node, TimeMs t_ms) const {
  const auto it = series_.find(node);
  if (it == series_.end()) {
    throw ContractError("trace: unknown node " + std::to_string(node.value));
  }
  if (t_ms < 0 || t_ms > duration_s_ * 1000) {
    throw ContractError("trace: t_ms out of range: " + std::to_string(t_ms));
  }
  auto idx = static_cast<std::size_t>((t_ms + 500) / 1000);
  if (idx >= it->second.size()) idx = it->second.size() - 1;
  return it->second[idx];
}

const std::vector<double>& Trace::series(NodeId node) const {
  const auto it = series_.find(node);
  if (it == series_.end()) {
    throw ContractError("trace: unknown node " + std::to_string(node.value));
  }
  return it->second;
}

Trace Trace::generate(const TraceConfig& config, const std::vector<NodeId>& nodes) {
  config.validate();
  if (nodes.empty()) throw ConfigError("trace: node list is empty");

  const Rng master(config.seed);
  Rng walk_rng = master.fork("trace/walk");
  Rng step_rng = master.fork("trace/steps");

  const auto n = static_cast<std::size_t>(config.duration_s);
  std::vector<double> base(n);
  double walk = 0.0;
  double occupancy = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::int64_t sod = static_cast<std::int64_t>(t) % 86400;
    const bool day = sod >= config.day_start_s && sod < config.day_end_s;

    walk += (day ? config.day_sigma_c : config.night_sigma_c) * walk_rng.normal(0.0, 1.0);

    if (day && t % 60 == 0 && step_rng.bernoulli(config.occupancy_step_prob)) {
      occupancy += step_rng.bernoulli(0.5) ? config.occupancy_step_c
                                           : -config.occupancy_step_c;
    }

    double v = config.base_temp_c + walk;
    if (day) {
      v += occupancy;
      v += config.ac_amplitude_c *
           std::sin(2.0 * std::numbers::pi * static_cast<double>(sod) /
                    static_cast<double>(config.ac_period_s));
    }
    base[t] = v;
  }

  Trace trace;
  trace.duration_s_ = config.duration_s;
  trace.order_ = nodes;
  for (const NodeId node : nodes) {
    Rng offset_rng = master.fork("trace/offset", static_cast<std::uint64_t>(node.value));
    const double offset = offset_rng.uniform(-1.0, 1.0);
    std::vector<double> series(n);
    for (std::size_t t = 0; t < n; ++t) series[t] = base[t] + offset;
    trace.series_.emplace(node, std::move(series));
  }
  return trace;
}

namespace {

double parse_double(std::string_view field, const char* what) {
  double out = 0.0;
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw IoError(std::string("trace csv: bad ") + what + " field: " + std::string(field));
  }
  return out;
}

std::int64_t parse_int(std::string_view field, const char* what) {
  std::int64_t out = 0;
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw IoError(std::string("trace csv: bad ") + what + " field: " + std::string(field));
  }
  return out;
}

}  // namespace

Trace Trace::from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t_s,node,value_c") {
    throw IoError("trace csv: expected header 't_s,node,value_c'");
  }

  Trace trace;
  std::int64_t max_t = -1;
  std::unordered_map<NodeId, std::int64_t> next_t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw IoError("trace csv: malformed row: " + line);
    }
    const std::int64_t t = parse_int(std::string_view(line).substr(0, c1), "t_s");
    const auto node_v = parse_int(
        std::string_view(line).substr(c1 + 1, c2 - c1 - 1), "node");
    const double value = parse_double(std::string_view(line).substr(c2 + 1), "value_c");

    const NodeId node{static_cast<std::int32_t>(node_v)};
    auto [it, inserted] = trace.series_.try_emplace(node);
    if (inserted) trace.order_.push_back(node);
    auto& expect = next_t[node];
    if (t != expect) {
      throw IoError("trace csv: node " + std::to_string(node.value) +
                    " rows not contiguous at t_s=" + std::to_string(t));
    }
    ++expect;
    it->second.push_back(value);
    max_t = std::max(max_t, t);
  }
  if (max_t < 0) throw IoError("trace csv: no data rows");
  trace.duration_s_ = max_t + 1;
  for (const auto& [node, series] : trace.series_) {
    if (static_cast<std::int64_t>(series.size()) != trace.duration_s_) {
      throw IoError("trace csv: node " + std::to_string(node.value) +
                    " has " + std::to_string(series.size()) + " rows, expected " +
                    std::to_string(trace.duration_s_));
    }
  }
  return trace;
}

void Trace::to_csv(std::ostream& out) const {
  out << "t_s,node,value_c\n";
  for (std::int64_t t = 0; t < duration_s_; ++t) {
    for (const NodeId node : order_) {
      out << t << ',' << node.value << ','
          << detail::double_to_string(series_.at(node)[static_cast<std::size_t>(t)])
          << '\n';
    }
  }
}

double trace_exceedance(const Trace& trace, NodeId node, SamplingInterval interval,
                        const AcceptanceThreshold& threshold) {
  if (trace.duration_s() <= 2 * interval.seconds()) {
    throw ContractError("trace_exceedance: trace shorter than two intervals");
  }
  std::int64_t pairs = 0;
  std::int64_t exceeded = 0;
  double prev = trace.sample_at(node, interval.millis());
  for (std::int64_t k = 2;; ++k) {
    const TimeMs t = k * interval.millis();
    if (t > trace.duration_s() * 1000) break;
    const double curr = trace.sample_at(node, t);
    ++pairs;
    if (std::abs(curr - prev) > threshold.celsius()) ++exceeded;
    prev = curr;
  }
  return static_cast<double>(exceeded) / static_cast<double>(pairs);
}

}  // namespace sna::envsim
