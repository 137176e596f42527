#include "shiftlab/errors.hpp"

namespace shiftlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeMismatch: return "size-mismatch";
    case ErrorKind::TruncationOverflow: return "truncation-overflow";
    case ErrorKind::Support: return "support";
    case ErrorKind::Margin: return "margin";
    case ErrorKind::NotUnimodular: return "not-unimodular";
    case ErrorKind::FloorViolation: return "floor-violation";
    case ErrorKind::ExtremePoint: return "extreme-point";
    case ErrorKind::Coprimality: return "coprimality";
    case ErrorKind::NotInModelSpace: return "not-in-model-space";
    case ErrorKind::NotInner: return "not-inner";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::NotUnitary: return "not-unitary";
    case ErrorKind::NotInvariant: return "not-invariant";
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
  }
  return "unknown";
}

}  // namespace shiftlab
