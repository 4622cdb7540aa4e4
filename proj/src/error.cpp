#include "hcurve/error.hpp"

namespace hcurve {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::precondition: return "precondition violated";
    case ErrorKind::degeneracy: return "degenerate jet";
    case ErrorKind::conditioning: return "ill-conditioned frame";
    case ErrorKind::resolution: return "insufficient grid resolution";
    case ErrorKind::step_size: return "integration step too large";
    case ErrorKind::misclassification: return "order misclassification";
    case ErrorKind::inconsistency: return "numerical inconsistency";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace hcurve
