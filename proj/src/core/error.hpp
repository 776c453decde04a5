#pragma once

#include <stdexcept>
#include <string>

namespace regdef {

enum class Errc {
  dimension_mismatch,
  not_m_primary,
  not_subideal,
  invalid_argument,
  parse,
  overflow,
  budget_exhausted,
  undefined,
  internal,
};

/// All library errors carry a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace regdef
