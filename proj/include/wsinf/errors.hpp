#pragma once

#include <stdexcept>
#include <string>

namespace wsinf {

/// Error categories. The CLI maps these onto exit codes: validation
/// failures exit 1, internal inconsistencies exit 2, resource limits exit 3.
enum class errc {
  empty_generators,
  non_positive_generator,
  gcd_not_one,
  overflow,
  not_a_member,
  precondition_violated,
  resource_limit,
  internal_inconsistency,
  hypothesis_not_met,
  invalid_parameter,
  not_a_square,
  index_out_of_range,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

/// True for errors caused by bad input (as opposed to internal
/// inconsistencies or resource exhaustion).
inline bool is_validation_error(errc c) {
  return c != errc::internal_inconsistency && c != errc::resource_limit;
}

}  // namespace wsinf
