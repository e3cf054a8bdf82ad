#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "sna/error.hpp"

namespace sna::detail {

// Shortest round-trip representation; identical input bits give identical
// bytes, which the deterministic-output contracts rely on.
inline std::string double_to_string(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw IoError("double_to_string: to_chars failed");
  return std::string(buf, res.ptr);
}

}  // namespace sna::detail
