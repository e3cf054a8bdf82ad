#pragma once

#include <stdexcept>
#include <string>

namespace sna {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration rejected before a run starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or unexpected wire traffic.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sna
