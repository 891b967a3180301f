#pragma once

#include <stdexcept>
#include <string>

namespace sdioph {

// Failure categories; the CLI maps these to exit codes.
enum class errc {
  invalid_argument,
  not_prime,
  duplicate_prime,
  empty_prime_set,
  unsupported_prime_size,
  non_positive,
  not_a_quadruple,
  system_unsatisfied,
  zero_coordinate,
  budget_exceeded,
  digit_budget_exceeded,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_prime: return "not_prime";
    case errc::duplicate_prime: return "duplicate_prime";
    case errc::empty_prime_set: return "empty_prime_set";
    case errc::unsupported_prime_size: return "unsupported_prime_size";
    case errc::non_positive: return "non_positive";
    case errc::not_a_quadruple: return "not_a_quadruple";
    case errc::system_unsatisfied: return "system_unsatisfied";
    case errc::zero_coordinate: return "zero_coordinate";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::digit_budget_exceeded: return "digit_budget_exceeded";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace sdioph
