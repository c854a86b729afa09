#include "dt4/error.hpp"

namespace dt4 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BoxInstability: return "BoxInstability";
    case ErrorKind::Unpairable: return "Unpairable";
    case ErrorKind::ZeroDimension: return "ZeroDimension";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace dt4
