#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>

#include "sna/error.hpp"

namespace sna {

// Milliseconds since the per-run epoch. No wall-clock types in the domain.
using TimeMs = std::int64_t;

struct NodeId {
  std::int32_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

// One of the five allowed sampling periods; doubles as the RL state index.
class SamplingInterval {
 public:
  static constexpr int kCount = 5;
  static constexpr std::array<std::int32_t, kCount> kSeconds{30, 60, 120, 240, 480};

  SamplingInterval() = default;  // 30 s

  static SamplingInterval from_index(int index) {
    if (index < 0 || index >= kCount) {
      throw ContractError("sampling interval index out of range [0,4]: " +
                          std::to_string(index));
    }
    return SamplingInterval(index);
  }

  static std::optional<SamplingInterval> from_seconds(std::int32_t seconds) {
    for (int i = 0; i < kCount; ++i) {
      if (kSeconds[i] == seconds) return SamplingInterval(i);
    }
    return std::nullopt;
  }

  int index() const { return index_; }
  std::int32_t seconds() const { return kSeconds[static_cast<std::size_t>(index_)]; }
  TimeMs millis() const { return static_cast<TimeMs>(seconds()) * 1000; }

  auto operator<=>(const SamplingInterval&) const = default;

 private:
  explicit SamplingInterval(int index) : index_(index) {}
  int index_ = 0;
};

// One timestamped temperature report. received_at is stamped by the
// dashboard; it is absent until the frame has been ingested.
struct Measurement {
  NodeId node;
  std::uint64_t seq = 0;
  double value_c = 0.0;
  TimeMs scheduled_at = 0;
  TimeMs sensed_at = 0;
  std::optional<TimeMs> received_at;

  bool operator==(const Measurement&) const = default;
};

// |difference| between two consecutive measurements of one node.
struct Delta {
  double value_c = 0.0;
};

class AcceptanceThreshold {
 public:
  explicit AcceptanceThreshold(double celsius = 0.5) : celsius_(celsius) {
    if (!(celsius > 0.0)) {
      throw ContractError("acceptance threshold must be > 0 degC");
    }
  }

  double celsius() const { return celsius_; }

 private:
  double celsius_;
};

Delta consecutive_delta(const Measurement& prev, const Measurement& curr);

// Transmissions made by a node sampling at `base` for `duration_s` seconds,
// with the first sample one full period after the epoch.
std::int64_t baseline_transmissions(std::int64_t duration_s, SamplingInterval base);

// 1 - actual/baseline. May be negative when overhead exceeds savings.
double savings_fraction(std::int64_t actual_tx, std::int64_t baseline_tx);

}  // namespace sna

template <>
struct std::hash<sna::NodeId> {
  std::size_t operator()(const sna::NodeId& n) const noexcept {
    return std::hash<std::int32_t>{}(n.value);
  }
};
