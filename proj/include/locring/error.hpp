#ifndef LOCRING_ERROR_HPP
#define LOCRING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locring {

enum class Errc {
  division_by_zero,
  field_mismatch,
  ring_mismatch,
  length_mismatch,
  dimension_mismatch,
  zero_polynomial,
  syntax_error,
  unknown_variable,
  coefficient_not_in_field,
  composite_modulus,
  not_a_syzygy,
  not_a_localized_syzygy,
  set_mismatch,
  bad_problem_file,
  unsupported,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t offset = npos)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  // Byte offset into the input for syntax errors, npos otherwise.
  std::size_t offset() const noexcept { return offset_; }

private:
  Errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::size_t offset = Error::npos) {
  throw Error(code, message, offset);
}

inline void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

// Internal consistency check; failures map to CLI exit code 3.
inline void invariant(bool cond, const std::string& message) {
  if (!cond) fail(Errc::internal, "invariant violation: " + message);
}

}  // namespace locring

#endif
