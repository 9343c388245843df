#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qsplit/error.hpp"

namespace qsplit {

// Exact rational coefficients. The whole kernel computes over Q: no floating
// point anywhere, so every pipeline result is bit-reproducible.
using Scalar = mpq_class;

inline std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

// Accepts "n" or "n/d" with arbitrary-precision decimal integers.
inline Scalar scalar_from_string(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    fail(errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  require(q.get_den() != 0, errc::parse_error,
          "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace qsplit
