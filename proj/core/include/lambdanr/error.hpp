#pragma once

#include <stdexcept>
#include <string>

namespace lambdanr {

enum class Errc {
  non_divisible,
  ring_mismatch,
  horizon_exceeded,
  q_algebra_required,
  not_t_shaped,
  unknown_support,
  certificate_violation,
  integrality_violation,
  not_integer_valued,
  internal_disagreement,
  not_mas,
  size_limit,
  not_divisor,
  length_mismatch,
  parse_error,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lambdanr
