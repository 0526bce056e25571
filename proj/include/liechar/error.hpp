#pragma once

#include <stdexcept>
#include <string>

namespace liechar {

enum class Errc {
  invalid_argument,
  ring_mismatch,
  shape,
  division_by_zero,
  degenerate_input,
  precondition,
  dimension_mismatch,
  singular_matrix,
  parse_syntax,
  index_order,
  jacobi_violation,
  not_found,
  io,
  inconsistent,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; the C API maps `code()` onto status codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liechar
