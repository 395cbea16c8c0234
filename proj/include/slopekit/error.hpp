#pragma once

#include <stdexcept>
#include <string>

namespace slopekit {

enum class ErrorKind {
  InvalidArgument,
  Precondition,
  Parse,
  NonConvex,
  NonIntegralBreakpoint,
  EndpointMismatch,
  NotApplicable,
  NotSymmetricallyAttainable,
  NotInvertible,
  PrecisionUnderflow,
  SizeGuardExceeded,
  CertificateInapplicable,
  NotASubgroup,
  NotNormalForm,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) raise(kind, what);
}

}  // namespace slopekit
