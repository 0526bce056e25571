#include "liechar/error.hpp"

namespace liechar {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::ring_mismatch: return "ring-mismatch";
    case Errc::shape: return "shape";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::degenerate_input: return "degenerate-input";
    case Errc::precondition: return "precondition";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::parse_syntax: return "parse-syntax";
    case Errc::index_order: return "index-order";
    case Errc::jacobi_violation: return "jacobi-violation";
    case Errc::not_found: return "not-found";
    case Errc::io: return "io";
    case Errc::inconsistent: return "inconsistent";
  }
  return "unknown";
}

}  // namespace liechar
