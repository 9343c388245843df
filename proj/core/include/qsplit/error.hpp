#pragma once

#include <stdexcept>
#include <string>

namespace qsplit {

// Every failure in the library is reported through this type. The code
// determines how the CLI maps a failure to an exit status: input-class
// codes exit 2, internal-consistency codes exit 3.
enum class errc {
  // input / precondition class
  unknown_vertex,
  unknown_arrow,
  duplicate_identifier,
  not_composable,
  not_connected,
  invalid_path,
  non_uniform_relation,
  non_admissible_generator,
  not_finite_dimensional,
  unknown_basis_path,
  not_basis_path,
  invalid_splitting_datum,
  precondition_failed,
  not_monomial,
  not_special_multiserial,
  relation_violated,
  non_split_quotient,
  lifting_exhausted,
  parse_error,
  // internal-consistency class
  witness_failure,
  inconclusive,
  internal_invariant_violation,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  errc code() const { return code_; }

  // True for failures that indicate a bug in the library rather than bad input.
  bool internal() const {
    return code_ == errc::witness_failure || code_ == errc::inconclusive ||
           code_ == errc::internal_invariant_violation;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
  if (!cond) fail(c, what);
}

}  // namespace qsplit
