#pragma once

#include <stdexcept>
#include <string>

namespace covbound {

// Error categories. The CLI maps these onto process exit codes:
// usage/input problems -> 2, budget exhaustion -> 3, failed verification -> 1.
enum class Errc {
  bad_params,
  not_prime_power,
  length_mismatch,
  budget_exceeded,
  trivial_code,
  not_an_extension,
  self_check_failed,
  method_inapplicable,
  radius_not_verified,
  radius_too_large,
  not_perfect,
  missing_param,
  missing_aux,
  q_even,
  out_of_range,
  nothing_applicable,
  parse_error,
  io_error,
};

class ToolError : public std::runtime_error {
 public:
  ToolError(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw ToolError(code, msg);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_params: return "bad_params";
    case Errc::not_prime_power: return "not_prime_power";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::trivial_code: return "trivial_code";
    case Errc::not_an_extension: return "not_an_extension";
    case Errc::self_check_failed: return "self_check_failed";
    case Errc::method_inapplicable: return "method_inapplicable";
    case Errc::radius_not_verified: return "radius_not_verified";
    case Errc::radius_too_large: return "radius_too_large";
    case Errc::not_perfect: return "not_perfect";
    case Errc::missing_param: return "missing_param";
    case Errc::missing_aux: return "missing_aux";
    case Errc::q_even: return "q_even";
    case Errc::out_of_range: return "out_of_range";
    case Errc::nothing_applicable: return "nothing_applicable";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace covbound
