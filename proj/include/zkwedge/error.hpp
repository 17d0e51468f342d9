#pragma once
// Error kinds shared by all modules; the C API maps them to zkw_status.

#include <stdexcept>
#include <string>

namespace zkw {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  SizeLimit,
  NotShifted,
  GhostVertex,
  NonRegularStep,
  Invariant,
  DivisionByZero,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zkw
