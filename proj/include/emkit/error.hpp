#pragma once

#include <stdexcept>
#include <string>

namespace emkit {

// Error categories map 1:1 onto CLI exit codes (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: unknown keys, unresolvable provider references,
// malformed config files. Exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad input data: malformed corpus lines, dangling ids, contract
// violations on operation arguments. Exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

// Remote provider failure after exhausting retries. Exit code 4.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_ = 0;
};

// A postcondition the library itself guarantees was observed broken.
// Exit code 5.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace emkit
