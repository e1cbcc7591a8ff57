#include "beadcalc/error.hpp"

namespace beadcalc {

const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadValence: return "BadValence";
    case ErrorKind::IncompleteCyclicOrder: return "IncompleteCyclicOrder";
    case ErrorKind::DuplicateLegLabel: return "DuplicateLegLabel";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotInF3: return "NotInF3";
    case ErrorKind::NotTrivalent: return "NotTrivalent";
    case ErrorKind::NonzeroBeadDegree: return "NonzeroBeadDegree";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
  }
  return "Unknown";
}

}  // namespace beadcalc
