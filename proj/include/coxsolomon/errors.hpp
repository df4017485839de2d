#ifndef COXSOLOMON_ERRORS_HPP
#define COXSOLOMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxsolomon {

enum class errc {
  parse_error,
  infinite_or_unsupported,
  cap_exceeded,
  mixed_systems,
  invalid_element,
  not_a_double_coset_rep,
  not_idempotent,
  singular_matrix,
  cross_check_mismatch,
  type_assignment_ambiguous,
  corrupt_cache,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace coxsolomon

#endif
