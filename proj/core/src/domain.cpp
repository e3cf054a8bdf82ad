#include "sna/domain.hpp"

#include <cmath>
#include <string>

namespace sna {

Delta consecutive_delta(const Measurement& prev, const Measurement& curr) {
  if (prev.node != curr.node) {
    throw ContractError("consecutive_delta: node mismatch (" +
                        std::to_string(prev.node.value) + " vs " +
                        std::to_string(curr.node.value) + ")");
  }
  if (curr.seq != prev.seq + 1) {
    throw ContractError("consecutive_delta: non-consecutive seq (" +
                        std::to_string(prev.seq) + " -> " +
                        std::to_string(curr.seq) + ")");
  }
  return Delta{std::abs(curr.value_c - prev.value_c)};
}

std::int64_t baseline_transmissions(std::int64_t duration_s, SamplingInterval base) {
  if (duration_s <= 0) {
    throw ContractError("baseline_transmissions: duration must be > 0");
  }
  return duration_s / base.seconds();
}

double savings_fraction(std::int64_t actual_tx, std::int64_t baseline_tx) {
  if (baseline_tx <= 0) {
    throw ContractError("savings_fraction: baseline must be > 0");
  }
  return 1.0 - static_cast<double>(actual_tx) / static_cast<double>(baseline_tx);
}

}  // namespace sna
