#include "wlab/error.hpp"

namespace wlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeModulusBase: return "CompositeModulusBase";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexDivisible: return "IndexDivisible";
    case ErrorCode::KummerInapplicable: return "KummerInapplicable";
    case ErrorCode::PrecisionUnderflow: return "PrecisionUnderflow";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotWolstenholme: return "NotWolstenholme";
    case ErrorCode::UnknownCheckName: return "UnknownCheckName";
    case ErrorCode::CheckpointCorrupt: return "CheckpointCorrupt";
    case ErrorCode::TaskMismatch: return "TaskMismatch";
  }
  return "Unknown";
}

}  // namespace wlab
