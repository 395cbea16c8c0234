#include "slopekit/error.hpp"

namespace slopekit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NonConvex: return "NonConvex";
    case ErrorKind::NonIntegralBreakpoint: return "NonIntegralBreakpoint";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotSymmetricallyAttainable: return "NotSymmetricallyAttainable";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PrecisionUnderflow: return "PrecisionUnderflow";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::CertificateInapplicable: return "CertificateInapplicable";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace slopekit
